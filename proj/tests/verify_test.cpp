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

#include <gtest/gtest.h>

#include <set>

#include "multicopy/errors.hpp"
#include "multicopy/verify.hpp"

using namespace multicopy;

TEST(verify, ids_are_unique_and_complete) {
  const auto &ids = acceptance_ids();
  EXPECT_EQ(ids.size(), 10u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
}

TEST(verify, only_filter_selects) {
  VerifyOptions opts;
  opts.only = "appendix-b,qutrit-transposition";
  const auto results = run_acceptance(opts);
  ASSERT_EQ(results.size(), 2u);
  for (const auto &r : results) {
    EXPECT_TRUE(r.passed) << r.id << ": " << r.detail;
    EXPECT_TRUE(r.id == "appendix-b" || r.id == "qutrit-transposition");
  }
}

TEST(verify, unknown_or_empty_selection_throws) {
  VerifyOptions opts;
  opts.only = "no-such-check";
  EXPECT_THROW(run_acceptance(opts), PreconditionError);
  opts.only = ",";
  EXPECT_THROW(run_acceptance(opts), PreconditionError);
}

TEST(verify, impossible_tolerance_fails) {
  VerifyOptions opts;
  opts.only = "qubit-transposition-spectrum";
  opts.tol_override = 1e-15;
  const auto results = run_acceptance(opts);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
  EXPECT_FALSE(results[0].detail.empty());
}

TEST(verify, dimension_limit_is_a_failure_not_a_crash) {
  VerifyOptions opts;
  opts.only = "qubit-transposition-spectrum";
  opts.max_side = 16;
  const auto results = run_acceptance(opts);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
}
