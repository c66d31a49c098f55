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

#include "multicopy/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "multicopy/eigen.hpp"
#include "multicopy/errors.hpp"
#include "multicopy/random.hpp"

namespace multicopy {

namespace {

constexpr double kOrthonormalTol = 1e-10;

void require_copies(std::size_t n_copies) {
  if (n_copies < 1) throw PreconditionError("number of copies must be >= 1");
}

void require_orthonormal(const TensorOperator &basis, std::size_t d) {
  if (basis.side() != d) {
    throw PreconditionError("basis must have " + std::to_string(d) + " vectors of length " +
                            std::to_string(d));
  }
  const TensorOperator gram = matmul(basis.adjoint(), basis);
  if (max_abs_diff(gram, TensorOperator::identity(Dims{d})) > kOrthonormalTol) {
    throw PreconditionError("basis is not orthonormal within 1e-10");
  }
}

// |u><w| as a d x d operator.
TensorOperator ketbra(const TensorOperator &basis, std::size_t u, std::size_t w) {
  const std::size_t d = basis.side();
  TensorOperator out(Dims{d});
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) out(r, c) = basis(r, u) * std::conj(basis(c, w));
  }
  return out;
}

}  // namespace

double eta_a_bound(std::size_t d0, std::size_t d1, std::size_t n_copies, bool qubit_improvement) {
  if (d0 < 1 || d1 < 1) throw PreconditionError("eta_a_bound: dimensions must be >= 1");
  require_copies(n_copies);
  const double k = (qubit_improvement && d1 == 2) ? static_cast<double>(d0 * d1)
                                                  : static_cast<double>(d0 * d1 * d1);
  return k / (static_cast<double>(n_copies) + k);
}

double eta_b_bound(std::size_t d1, std::size_t n_copies, bool qubit_improvement) {
  if (d1 < 2) throw PreconditionError("eta_b_bound: d1 must be >= 2");
  require_copies(n_copies);
  const double k = (qubit_improvement && d1 == 2) ? static_cast<double>(d1)
                                                  : static_cast<double>(d1 * d1);
  return k / (static_cast<double>(n_copies) + k);
}

ThresholdBounds threshold_bounds(std::size_t d0, std::size_t d1, std::size_t n_copies,
                                 bool qubit_improvement) {
  ThresholdBounds b;
  b.d0 = d0;
  b.d1 = d1;
  b.n_copies = n_copies;
  b.eta_a_sufficient = eta_a_bound(d0, d1, n_copies, qubit_improvement);
  b.eta_b_sufficient = eta_b_bound(d1, n_copies, qubit_improvement);
  b.used_qubit_improvement = qubit_improvement && d1 == 2;
  return b;
}

TranspositionBounds transposition_bounds(std::size_t d, std::size_t n_copies) {
  if (d < 2) throw PreconditionError("transposition_bounds: d must be >= 2");
  require_copies(n_copies);
  const double dd = static_cast<double>(d);
  const double n = static_cast<double>(n_copies);
  TranspositionBounds b;
  b.d = d;
  b.n_copies = n_copies;
  b.eta_sufficient = dd * dd / (n + dd * dd);
  b.eta_necessary_below = std::min(dd / (dd + 1.0), dd * (dd - 1.0) / (n + dd * (dd - 1.0)));
  return b;
}

TensorOperator necessity_operator(const LinearMap &m, std::size_t n_copies,
                             const std::optional<TensorOperator> &basis) {
  require_copies(n_copies);
  const std::size_t din = m.d_in();
  const std::size_t dout = m.d_out();
  const TensorOperator k = basis ? *basis : TensorOperator::identity(Dims{din});
  if (basis) require_orthonormal(k, din);

  TensorOperator op(Dims{din, dout});
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t j = 0; j < din; ++j) {
      const TensorOperator image = apply(m, ketbra(k, i, j));
      for (std::size_t a = 0; a < dout; ++a) {
        for (std::size_t b = 0; b < dout; ++b) op(i * dout + a, j * dout + b) = image(a, b);
      }
    }
  }
  if (n_copies > 1) {
    const TensorOperator anchor = apply(m, ketbra(k, 0, 0));
    const double w = static_cast<double>(n_copies - 1);
    for (std::size_t i = 1; i < din; ++i) {
      for (std::size_t a = 0; a < dout; ++a) {
        for (std::size_t b = 0; b < dout; ++b) op(i * dout + a, i * dout + b) += w * anchor(a, b);
      }
    }
  }
  return op;
}

NecessityReport necessity_check(const LinearMap &m, std::size_t n_copies,
                           const std::optional<TensorOperator> &basis, double tol) {
  NecessityReport r;
  r.n_copies = n_copies;
  r.basis = basis ? *basis : TensorOperator::identity(Dims{m.d_in()});
  r.op = necessity_operator(m, n_copies, basis);
  r.lambda_min = hermitian_lambda_min(r.op);
  r.conclusive_negative = r.lambda_min < -tol;
  return r;
}

NecessityReport necessity_basis_search(const LinearMap &m, std::size_t n_copies, int trials,
                                  std::uint64_t seed, double tol) {
  if (trials < 1) throw PreconditionError("necessity_basis_search: trials must be >= 1");
  NecessityReport best = necessity_check(m, n_copies, std::nullopt, tol);
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    NecessityReport r = necessity_check(m, n_copies, random_unitary(m.d_in(), rng), tol);
    if (r.lambda_min < best.lambda_min) best = std::move(r);
  }
  return best;
}

}  // namespace multicopy
