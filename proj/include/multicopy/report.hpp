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

#ifndef MULTICOPY_REPORT_HPP
#define MULTICOPY_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "multicopy/criteria.hpp"
#include "multicopy/extension.hpp"

namespace multicopy {

inline constexpr const char *kVersion = "0.1.0";

/// `v` with `digits` significant digits (printf %g style).
std::string format_sig(double v, int digits = 12);

/// JSON forms of the analysis results. Wall-clock fields are left out so
/// that identical inputs serialize to identical bytes.
nlohmann::json to_json(const ImplementabilityReport &r);
nlohmann::json to_json(const NecessityReport &r);
nlohmann::json to_json(const ThresholdBounds &b);
nlohmann::json to_json(const TranspositionBounds &b);

/// Fixed-width text table with left-aligned columns.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  std::string render() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace multicopy

#endif  // MULTICOPY_REPORT_HPP
