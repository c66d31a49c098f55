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

#ifndef MULTICOPY_APPENDIX_HPP
#define MULTICOPY_APPENDIX_HPP

// Executable forms of two explicit constructions:
//
//  * the congruence V that maps the N-copy extension Choi operator onto the
//    necessary-condition operator (see necessity_operator), together with the
//    operators a_ij it induces and their expansion in pure power operators;
//  * the anti-symmetric eigenvector of the transposition extension, which
//    witnesses lambda_min(L_N) <= -(d - 1)/N.

#include <vector>

#include "multicopy/extension.hpp"
#include "multicopy/tensor.hpp"

namespace multicopy {

/// V : H_0 (x) H_1 (x) ... (x) H_N -> H_1 (x) H_0.
///
/// Column factors are [d0, d1, ..., d1] (the extension Choi layout); row
/// factors are [d1, d0] (the single-copy Choi layout). V sends
/// |b>_0 |0...0> to |0>|b> and |b>_0 |i in slot k, 0 elsewhere> to |i>|b>
/// for i >= 1; all other basis vectors go to zero.
struct VOperator {
  std::size_t d1 = 0;
  std::size_t d0 = 0;
  std::size_t n_copies = 0;
  RectMatrix matrix;
};

VOperator v_operator(std::size_t d1, std::size_t d0, std::size_t n_copies,
                     std::size_t max_side = kDefaultMaxSide);

/// V X V^dagger.
TensorOperator phi_apply(const VOperator &v, const TensorOperator &x);

/// The operator a_ij on N qudits of dimension d:
///   a_00 = |0><0|^(x)N,  a_i0 = sum_k |i_k><0...0|,  a_0j = sum_k |0...0><j_k|,
///   a_ij = (sum_k |i_k>)(sum_l <j_l|)   for i, j >= 1,
/// where |i_k> has i in slot k and 0 elsewhere.
TensorOperator a_operator(std::size_t i, std::size_t j, std::size_t d, std::size_t n_copies);

/// coefficient * (|ket><bra|)^(x)N with single-qudit ket and bra.
struct PowerTerm {
  cplx coefficient;
  StateVector ket;
  StateVector bra;
};

/// Finite expansion of a_ij over power operators, from an M-point
/// discretization of the phase integrals. The discretization is exact when
/// M exceeds the largest phase exponent in magnitude; smaller M aliases and
/// shows up as a large recon_error, flagged by `exact == false`.
struct SpanWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t quadrature_points = 0;
  std::vector<PowerTerm> terms;
  double recon_error = 0.0;
  bool exact = false;
};

inline constexpr double kSpanExactTol = 1e-10;

SpanWitness a_span_decomposition(std::size_t i, std::size_t j, std::size_t d, std::size_t n_copies,
                                 std::size_t quadrature_points);

/// sum_t c_t (|ket_t><bra_t|)^(x)N.
TensorOperator reconstruct(const std::vector<PowerTerm> &terms, std::size_t n_copies);

/// Rewrites every term |u><w|^(x)N as a combination of pure projectors
/// |psi><psi|^(x)N with psi = u + e^{i theta} w on 2N + 1 phases.
std::vector<PowerTerm> expand_to_projectors(const std::vector<PowerTerm> &terms,
                                            std::size_t n_copies);

/// Normalized totally anti-symmetric state on d qudits of dimension d,
/// 2 <= d <= 5.
struct AntisymVector {
  std::size_t d = 0;
  StateVector vector;
};

AntisymVector antisymmetric_state(std::size_t d);

/// Unnormalized |Psi_N> on [d, d, ..., d] (N + 1 factors, output first):
/// sum over k_1 < ... < k_{d-1} in 1..N of c(k) |A_d> on factors
/// (0, k_1, ..., k_{d-1}) and |0> elsewhere, with c = 1 for even d and
/// c = sum_m (-1)^m k_m for odd d.
struct PsiVector {
  StateVector vector;
  double norm = 0.0;
};

PsiVector psi_vector(std::size_t d, std::size_t n_copies, std::size_t max_side = kDefaultMaxSide);

struct EigvecCheck {
  double rayleigh = 0.0;   // <psi|L_N|psi> / <psi|psi>
  double residual = 0.0;   // ||L_N psi - rayleigh psi|| / ||psi||
  double expected = 0.0;   // -(d - 1)/N
  double residual_vs_expected = 0.0;  // ||L_N psi - expected psi|| / ||psi||
};

/// Applies the transposition extension L_N to |Psi_N>.
EigvecCheck verify_transposition_eigvec(std::size_t d, std::size_t n_copies,
                                        std::size_t max_side = kDefaultMaxSide);

}  // namespace multicopy

#endif  // MULTICOPY_APPENDIX_HPP
