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

#ifndef MULTICOPY_VERIFY_HPP
#define MULTICOPY_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multicopy/tensor.hpp"

namespace multicopy {

/// Outcome of one reproduction check.
struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double elapsed_s = 0.0;
};

struct VerifyOptions {
  /// Replaces every numeric tolerance of every check when set.
  std::optional<double> tol_override;
  /// Comma-separated check ids; empty runs everything.
  std::string only;
  std::uint64_t seed = 0;
  std::size_t max_side = kDefaultMaxSide;
};

/// Ids in execution order.
const std::vector<std::string> &acceptance_ids();

/// Runs the selected checks. Throws PreconditionError for an unknown id in
/// `only`. A check that throws is reported as failed with the message.
std::vector<CheckResult> run_acceptance(const VerifyOptions &opts = {});

}  // namespace multicopy

#endif  // MULTICOPY_VERIFY_HPP
