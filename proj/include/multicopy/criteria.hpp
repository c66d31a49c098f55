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

#ifndef MULTICOPY_CRITERIA_HPP
#define MULTICOPY_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "multicopy/maps.hpp"
#include "multicopy/tensor.hpp"

namespace multicopy {

/// Noise levels that guarantee N-copy implementability of any positive map
/// with the given dimensions.
struct ThresholdBounds {
  double eta_a_sufficient = 0.0;
  double eta_b_sufficient = 0.0;
  bool used_qubit_improvement = false;
  std::size_t d0 = 0;
  std::size_t d1 = 0;
  std::size_t n_copies = 0;
};

/// Bounds for the d-dimensional noisy transposition
/// rho -> (1 - eta) rho^T + eta I/d: implementable at eta >= eta_sufficient,
/// not implementable below eta_necessary_below.
struct TranspositionBounds {
  std::size_t d = 0;
  std::size_t n_copies = 0;
  double eta_sufficient = 0.0;
  double eta_necessary_below = 0.0;
};

/// One-sided test: conclusive_negative means the map is certainly not
/// N-copy implementable; otherwise nothing is claimed.
struct NecessityReport {
  std::size_t n_copies = 0;
  TensorOperator basis;  // column k is basis vector k
  TensorOperator op;
  double lambda_min = 0.0;
  bool conclusive_negative = false;
};

/// d0 d1^2 / (N + d0 d1^2), or d0 d1 / (N + d0 d1) when d1 == 2 and
/// `qubit_improvement` is set.
double eta_a_bound(std::size_t d0, std::size_t d1, std::size_t n_copies,
                   bool qubit_improvement = true);

/// d1^2 / (N + d1^2), or d1 / (N + d1) when d1 == 2 and `qubit_improvement`
/// is set.
double eta_b_bound(std::size_t d1, std::size_t n_copies, bool qubit_improvement = true);

ThresholdBounds threshold_bounds(std::size_t d0, std::size_t d1, std::size_t n_copies,
                                 bool qubit_improvement = true);

TranspositionBounds transposition_bounds(std::size_t d, std::size_t n_copies);

/// The operator
///
///     sum_ij |i><j| (x) Lambda(|k_i><k_j|) + (N - 1) sum_{i>=1} |i><i| (x) Lambda(|k_0><k_0|)
///
/// on [d_in, d_out], written in the coordinates of the orthonormal basis
/// {k_i} (columns of `basis`; computational basis when absent). A unitary
/// change of basis on the input factor turns it into the same expression with
/// |k_i><k_j| on the input factor, so the spectrum is basis-coordinate free.
TensorOperator necessity_operator(const LinearMap &m, std::size_t n_copies,
                             const std::optional<TensorOperator> &basis = std::nullopt);

NecessityReport necessity_check(const LinearMap &m, std::size_t n_copies,
                           const std::optional<TensorOperator> &basis = std::nullopt,
                           double tol = kDefaultPsdTol);

/// Runs necessity_check in the computational basis and in `trials` Haar-random
/// bases; returns the report with the smallest lambda_min.
NecessityReport necessity_basis_search(const LinearMap &m, std::size_t n_copies, int trials,
                                  std::uint64_t seed = 0, double tol = kDefaultPsdTol);

}  // namespace multicopy

#endif  // MULTICOPY_CRITERIA_HPP
