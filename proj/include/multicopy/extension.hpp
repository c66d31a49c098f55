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

#ifndef MULTICOPY_EXTENSION_HPP
#define MULTICOPY_EXTENSION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multicopy/maps.hpp"
#include "multicopy/tensor.hpp"

namespace multicopy {

/// Choi operator of the symmetrized N-copy extension
///
///     L_N = (1/N) sum_{i=1..N} (L)_{0,i} (x) I_rest
///
/// Factor order is [d_out, d_in, ..., d_in]: the output space comes first,
/// followed by the N input copies.
struct ExtensionChoi {
  std::size_t n_copies = 0;
  LinearMap base;
  TensorOperator op;
};

/// Verdict on N-copy implementability: psd <=> lambda_min >= -tol.
struct ImplementabilityReport {
  std::size_t n_copies = 0;
  double lambda_min = 0.0;
  bool psd = false;
  double tol = 0.0;
  std::size_t dim = 0;
  double elapsed_s = 0.0;
};

struct CopySearchResult {
  std::optional<std::size_t> min_n;
  std::vector<ImplementabilityReport> reports;
  /// Set when the search stopped on a dimension limit before N_max.
  std::optional<std::string> aborted;
};

/// Side d_out * d_in^N, or throws DimensionLimitError above `max_side`.
std::size_t extension_side(const LinearMap &m, std::size_t n_copies,
                           std::size_t max_side = kDefaultMaxSide);

/// Builds L_N by accumulating the factor-permuted copies of the i = 1 term.
ExtensionChoi sym_extension_choi(const LinearMap &m, std::size_t n_copies,
                                 std::size_t max_side = kDefaultMaxSide);

/// (1/N) sum_i Lambda(rho_i) prod_{j != i} Tr rho_j, evaluated directly.
TensorOperator apply_sym_extension(const LinearMap &m, std::span<const TensorOperator> states);

/// Action of the extension on an operator X over the N input copies:
/// Lambda_N(X)_ab = sum_xy X_xy op[(a,x),(b,y)].
TensorOperator apply_extension(const ExtensionChoi &ext, const TensorOperator &x);

ImplementabilityReport implementable(const LinearMap &m, std::size_t n_copies,
                                     double tol = kDefaultPsdTol,
                                     std::size_t max_side = kDefaultMaxSide);

/// Tries N = 1, 2, ... up to n_max and stops at the first PSD extension.
CopySearchResult min_copies(const LinearMap &m, std::size_t n_max, double tol = kDefaultPsdTol,
                            std::size_t max_side = kDefaultMaxSide);

/// Smallest eta making noisy_a(m, eta) N-copy implementable.
///
/// The extension of the white-noise family is (1 - eta) L_N + eta c I with
/// c = Tr L / (d_in d_out), so with lambda = lambda_min(L_N) the answer is 0
/// when lambda >= -tol and -lambda / (c - lambda) otherwise.
double critical_eta_a(const LinearMap &m, std::size_t n_copies, double tol = kDefaultPsdTol,
                      std::size_t max_side = kDefaultMaxSide);

struct BisectionOptions {
  double width = 1e-6;
  double psd_tol = 1e-10;
  std::size_t max_side = kDefaultMaxSide;
};

/// Smallest eta making noisy_b(m, eta) N-copy implementable, by bisection.
///
/// lambda_min of the extension is concave along the affine eta family and
/// the predicate holds at eta = 1 for positive maps, so the feasible set is
/// an interval ending at 1. Returns the feasible end of the final bracket.
/// Throws PreconditionError when even eta = 1 is infeasible (a non-positive
/// map).
double critical_eta_b(const LinearMap &m, std::size_t n_copies, const BisectionOptions &opts = {});

}  // namespace multicopy

#endif  // MULTICOPY_EXTENSION_HPP
