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

#ifndef MULTICOPY_MAPS_HPP
#define MULTICOPY_MAPS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "multicopy/tensor.hpp"

namespace multicopy {

/// A linear map L(C^d_in) -> L(C^d_out) stored as its Choi operator
///
///     L = sum_ij |i><j| (x) Lambda(|i><j|)
///
/// with dims {d_in, d_out}: the input factor comes first.
class LinearMap {
 public:
  /// Takes ownership of `choi`; its dims must be {d_in, d_out}.
  LinearMap(std::size_t d_in, std::size_t d_out, TensorOperator choi);

  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }
  const TensorOperator &choi() const { return choi_; }

 private:
  std::size_t d_in_;
  std::size_t d_out_;
  TensorOperator choi_;
};

/// Certificate that a map is not positive: <phi| Lambda(|psi><psi|) |phi> < 0.
struct PositivityWitness {
  StateVector psi_in;
  StateVector phi_out;
  double value = 0.0;
};

LinearMap transposition_map(std::size_t d);
LinearMap identity_map(std::size_t d);

/// The 3x3 Choi map: diagonal outputs (x00 + x22, x00 + x11, x11 + x22) and
/// off-diagonal outputs -x_ij. Not trace normalized: Tr C(rho) = 2 Tr rho.
LinearMap choi_map_3();

/// rho -> scale * (I / d_out) * Tr rho.
LinearMap depolarizing_to(std::size_t d_in, std::size_t d_out, double scale = 1.0);

/// sum_k weights[k] * maps[k]. Weights may be negative.
LinearMap mix(std::span<const LinearMap> maps, std::span<const double> weights);

/// (1 - eta) Lambda(rho) + eta (Tr L / d_in) (I / d_out) Tr rho.
LinearMap noisy_a(const LinearMap &m, double eta);

/// (1 - eta) Lambda(rho) + eta Lambda(I / d_in) Tr rho.
LinearMap noisy_b(const LinearMap &m, double eta);

/// Lambda(rho) = Tr_in[(rho^T (x) I) L].
TensorOperator apply(const LinearMap &m, const TensorOperator &rho);

/// Lambda^dagger(Y) = Tr_out[(I (x) Y^T) L]^T, the Hilbert-Schmidt adjoint.
TensorOperator apply_adjoint(const LinearMap &m, const TensorOperator &y);

/// after o before.
LinearMap compose(const LinearMap &after, const LinearMap &before);

/// Tr_out L == I_in within `tol` (max-entry).
bool is_trace_preserving(const LinearMap &m, double tol = 1e-9);

/// Lambda(I_in) == I_out within `tol` (max-entry).
bool is_unital(const LinearMap &m, double tol = 1e-9);

/// Heuristic search for a product state with negative Choi expectation.
///
/// Alternates between the smallest eigenvector of Lambda(|psi><psi|) (over
/// phi) and of the adjoint action (over psi), from `restarts` seeded random
/// starts with `iters` sweeps each. A returned witness has value < -1e-10;
/// an empty result does not certify positivity.
std::optional<PositivityWitness> refute_positivity(const LinearMap &m, int restarts = 16,
                                                   int iters = 50, std::uint64_t seed = 0);

}  // namespace multicopy

#endif  // MULTICOPY_MAPS_HPP
