// Copyright 2026 The Multicopy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "multicopy/report.hpp"

#include <algorithm>
#include <cstdio>

#include "multicopy/errors.hpp"

namespace multicopy {

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

nlohmann::json to_json(const ImplementabilityReport &r) {
  return {{"n", r.n_copies}, {"dim", r.dim}, {"lambda_min", r.lambda_min}, {"psd", r.psd}, {"tol", r.tol}};
}

nlohmann::json to_json(const NecessityReport &r) {
  return {{"n", r.n_copies}, {"lambda_min", r.lambda_min}, {"conclusive_negative", r.conclusive_negative}};
}

nlohmann::json to_json(const ThresholdBounds &b) {
  return {{"d0", b.d0},
          {"d1", b.d1},
          {"n", b.n_copies},
          {"eta_a_sufficient", b.eta_a_sufficient},
          {"eta_b_sufficient", b.eta_b_sufficient},
          {"qubit_improvement", b.used_qubit_improvement}};
}

nlohmann::json to_json(const TranspositionBounds &b) {
  return {{"d", b.d},
          {"n", b.n_copies},
          {"eta_sufficient", b.eta_sufficient},
          {"eta_necessary_below", b.eta_necessary_below}};
}

TextTable::TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

void TextTable::add_row(std::vector<std::string> row) {
  if (row.size() != rows_.front().size()) throw ShapeError("TextTable: row width differs from header");
  rows_.push_back(std::move(row));
}

std::string TextTable::render() const {
  std::vector<std::size_t> width(rows_.front().size(), 0);
  for (const auto &row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto &row : rows_) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace multicopy
