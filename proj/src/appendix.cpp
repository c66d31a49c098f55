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

#include "multicopy/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "multicopy/errors.hpp"

namespace multicopy {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

StateVector qudit(std::size_t d, std::size_t level) {
  StateVector v(Dims{d});
  v[level] = 1.0;
  return v;
}

// |level> in slot 0, |0> elsewhere, on N qudits.
StateVector first_slot(std::size_t d, std::size_t n_copies, std::size_t level) {
  std::vector<std::size_t> digits(n_copies, 0);
  digits[0] = level;
  return StateVector::basis(Dims(n_copies, d), digits);
}

// S_{1k} in 1-based slot labels: swaps slots 0 and k-1.
StateVector swap_first_with(const StateVector &v, std::size_t k) {
  std::vector<std::size_t> perm(v.dims().size());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[k - 1]);
  return permute_factors(v, perm);
}

int permutation_sign(const std::vector<std::size_t> &p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p[a] > p[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

cplx phase(double theta) { return std::polar(1.0, theta); }

}  // namespace

VOperator v_operator(std::size_t d1, std::size_t d0, std::size_t n_copies, std::size_t max_side) {
  if (n_copies < 1) throw PreconditionError("v_operator: N must be >= 1");
  if (d1 < 1 || d0 < 1) throw PreconditionError("v_operator: dimensions must be >= 1");
  std::size_t in_side = d0;
  for (std::size_t k = 0; k < n_copies; ++k) {
    in_side *= d1;
    check_side(in_side, max_side, "v_operator");
  }
  Dims cols{d0};
  cols.insert(cols.end(), n_copies, d1);
  VOperator v{d1, d0, n_copies, RectMatrix(Dims{d1, d0}, cols)};
  const std::size_t inputs = ipow(d1, n_copies);
  for (std::size_t b = 0; b < d0; ++b) {
    v.matrix(0 * d0 + b, b * inputs + 0) = 1.0;
    for (std::size_t i = 1; i < d1; ++i) {
      for (std::size_t k = 1; k <= n_copies; ++k) {
        v.matrix(i * d0 + b, b * inputs + i * ipow(d1, n_copies - k)) += 1.0;
      }
    }
  }
  return v;
}

TensorOperator phi_apply(const VOperator &v, const TensorOperator &x) {
  return conjugate_by(v.matrix, x);
}

TensorOperator a_operator(std::size_t i, std::size_t j, std::size_t d, std::size_t n_copies) {
  if (n_copies < 1) throw PreconditionError("a_operator: N must be >= 1");
  if (i >= d || j >= d) throw PreconditionError("a_operator: index out of range for dimension d");
  const StateVector zeros = first_slot(d, n_copies, 0);
  if (i == 0 && j == 0) return zeros.projector();

  if (i == 0 || j == 0) {
    // sum_k S_1k (|i><j|_1 (x) |0><0|_rest) S_1k^dagger
    const StateVector ket = first_slot(d, n_copies, i);
    const StateVector bra = first_slot(d, n_copies, j);
    TensorOperator a(Dims(n_copies, d));
    for (std::size_t k = 1; k <= n_copies; ++k) {
      a += swap_first_with(ket, k).outer(swap_first_with(bra, k));
    }
    return a;
  }

  StateVector ket(Dims(n_copies, d));
  StateVector bra(Dims(n_copies, d));
  for (std::size_t k = 1; k <= n_copies; ++k) {
    ket += swap_first_with(first_slot(d, n_copies, i), k);
    bra += swap_first_with(first_slot(d, n_copies, j), k);
  }
  return ket.outer(bra);
}

TensorOperator reconstruct(const std::vector<PowerTerm> &terms, std::size_t n_copies) {
  if (terms.empty()) throw PreconditionError("reconstruct: no terms");
  const std::size_t d = terms.front().ket.size();
  TensorOperator acc(Dims(n_copies, d));
  for (const PowerTerm &t : terms) {
    const TensorOperator single = t.ket.outer(t.bra);
    TensorOperator power = single;
    for (std::size_t k = 1; k < n_copies; ++k) power = kron(power, single);
    acc += power * t.coefficient;
  }
  return acc;
}

SpanWitness a_span_decomposition(std::size_t i, std::size_t j, std::size_t d, std::size_t n_copies,
                                 std::size_t quadrature_points) {
  if (n_copies < 1) throw PreconditionError("a_span_decomposition: N must be >= 1");
  if (i >= d || j >= d) throw PreconditionError("a_span_decomposition: index out of range");
  if (quadrature_points < 1) throw PreconditionError("a_span_decomposition: M must be >= 1");
  const std::size_t m = quadrature_points;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);

  SpanWitness w;
  w.i = i;
  w.j = j;
  w.quadrature_points = m;
  const StateVector zero = qudit(d, 0);

  if (i == 0 && j == 0) {
    w.terms.push_back({1.0, zero, zero});
  } else if (j == 0) {
    // (1/2pi) int e^{-i theta} |psi_theta><0|^(x)N, psi_theta = |0> + e^{i theta}|i>
    for (std::size_t t = 0; t < m; ++t) {
      const double theta = step * static_cast<double>(t);
      StateVector psi = qudit(d, i);
      psi *= phase(theta);
      psi += zero;
      w.terms.push_back({phase(-theta) / static_cast<double>(m), psi, zero});
    }
  } else if (i == 0) {
    // (1/2pi) int e^{-i theta} |0><psi_theta|^(x)N, <psi_theta| = <0| + e^{i theta}<j|
    for (std::size_t t = 0; t < m; ++t) {
      const double theta = step * static_cast<double>(t);
      StateVector psi = qudit(d, j);
      psi *= phase(-theta);
      psi += zero;
      w.terms.push_back({phase(-theta) / static_cast<double>(m), zero, psi});
    }
  } else {
    // (1/2pi)^2 int int e^{-i(theta+phi)} |psi_1,theta><psi_2,phi|^(x)N with
    // psi_1 = |0> + e^{i theta}|i>, psi_2 = |0> + e^{-i phi}|j>
    const double norm = 1.0 / static_cast<double>(m * m);
    for (std::size_t t = 0; t < m; ++t) {
      const double theta = step * static_cast<double>(t);
      StateVector ket = qudit(d, i);
      ket *= phase(theta);
      ket += zero;
      for (std::size_t u = 0; u < m; ++u) {
        const double phi = step * static_cast<double>(u);
        StateVector bra = qudit(d, j);
        bra *= phase(-phi);
        bra += zero;
        w.terms.push_back({phase(-(theta + phi)) * norm, ket, bra});
      }
    }
  }
  w.recon_error = max_abs_diff(reconstruct(w.terms, n_copies), a_operator(i, j, d, n_copies));
  w.exact = w.recon_error <= kSpanExactTol;
  return w;
}

std::vector<PowerTerm> expand_to_projectors(const std::vector<PowerTerm> &terms,
                                            std::size_t n_copies) {
  // |psi><psi| = |u><u| + e^{-i theta}|u><w| + e^{i theta}|w><u| + |w><w|, so
  // the e^{-i N theta} Fourier mode of |psi><psi|^(x)N is |u><w|^(x)N. Phase
  // exponents span [-N, N]; 2N + 1 points separate them.
  const std::size_t m = 2 * n_copies + 1;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  const double nn = static_cast<double>(n_copies);
  std::vector<PowerTerm> out;
  out.reserve(terms.size() * m);
  for (const PowerTerm &t : terms) {
    for (std::size_t k = 0; k < m; ++k) {
      const double theta = step * static_cast<double>(k);
      StateVector psi = t.bra;
      psi *= phase(theta);
      psi += t.ket;
      out.push_back({t.coefficient * phase(nn * theta) / static_cast<double>(m), psi, psi});
    }
  }
  return out;
}

AntisymVector antisymmetric_state(std::size_t d) {
  if (d < 2 || d > 5) throw PreconditionError("antisymmetric_state: d must lie in [2, 5]");
  StateVector v(Dims(d, d));
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  const double amp = 1.0 / std::sqrt(factorial(d));
  do {
    v[flatten_index(v.dims(), sigma)] = amp * permutation_sign(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return AntisymVector{d, std::move(v)};
}

PsiVector psi_vector(std::size_t d, std::size_t n_copies, std::size_t max_side) {
  if (d < 2 || d > 5) throw PreconditionError("psi_vector: d must lie in [2, 5]");
  if (n_copies + 1 < d) throw PreconditionError("psi_vector: requires N >= d - 1");
  std::size_t side = d;
  for (std::size_t k = 0; k < n_copies; ++k) {
    side *= d;
    check_side(side, max_side, "psi_vector");
  }
  const Dims dims(n_copies + 1, d);
  StateVector psi(dims);
  const double amp = 1.0 / std::sqrt(factorial(d));

  // Subsets k_1 < ... < k_{d-1} of {1..N}, enumerated lexicographically.
  std::vector<std::size_t> ks(d - 1);
  std::iota(ks.begin(), ks.end(), 1);
  std::vector<std::size_t> sigma(d);
  std::vector<std::size_t> digits(n_copies + 1);
  while (true) {
    double c = 1.0;
    if (d % 2 == 1) {
      c = 0.0;
      for (std::size_t m = 0; m < ks.size(); ++m) {
        const double sign = (m + 1) % 2 == 0 ? 1.0 : -1.0;  // (-1)^m with 1-based m
        c += sign * static_cast<double>(ks[m]);
      }
    }
    if (c != 0.0) {
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        std::fill(digits.begin(), digits.end(), 0);
        digits[0] = sigma[0];
        for (std::size_t m = 0; m < ks.size(); ++m) digits[ks[m]] = sigma[m + 1];
        psi[flatten_index(dims, digits)] += c * amp * permutation_sign(sigma);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    // next combination
    std::size_t pos = ks.size();
    while (pos > 0 && ks[pos - 1] == n_copies - (ks.size() - pos)) --pos;
    if (pos == 0) break;
    ++ks[pos - 1];
    for (std::size_t q = pos; q < ks.size(); ++q) ks[q] = ks[q - 1] + 1;
  }
  const double nrm = psi.norm();
  return PsiVector{std::move(psi), nrm};
}

EigvecCheck verify_transposition_eigvec(std::size_t d, std::size_t n_copies, std::size_t max_side) {
  const PsiVector pv = psi_vector(d, n_copies, max_side);
  if (pv.norm == 0.0) throw PreconditionError("verify_transposition_eigvec: |Psi_N> vanishes");
  const ExtensionChoi ext = sym_extension_choi(transposition_map(d), n_copies, max_side);
  const StateVector lpsi = ext.op * pv.vector;

  EigvecCheck out;
  const double nn = pv.norm * pv.norm;
  out.rayleigh = inner(pv.vector, lpsi).real() / nn;
  out.expected = -static_cast<double>(d - 1) / static_cast<double>(n_copies);
  double r1 = 0.0;
  double r2 = 0.0;
  for (std::size_t k = 0; k < lpsi.size(); ++k) {
    r1 += std::norm(lpsi[k] - out.rayleigh * pv.vector[k]);
    r2 += std::norm(lpsi[k] - out.expected * pv.vector[k]);
  }
  out.residual = std::sqrt(r1) / pv.norm;
  out.residual_vs_expected = std::sqrt(r2) / pv.norm;
  return out;
}

}  // namespace multicopy
