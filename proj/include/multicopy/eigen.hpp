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

#ifndef MULTICOPY_EIGEN_HPP
#define MULTICOPY_EIGEN_HPP

#include <vector>

#include "multicopy/tensor.hpp"

namespace multicopy {

/// Entrywise Hermiticity slack accepted before an operator is rejected,
/// relative to max(1, largest entry modulus).
inline constexpr double kHermitianSlack = 1e-12;

/// Returns (X + X^dagger) / 2, or throws PreconditionError when X is further
/// than kHermitianSlack from Hermitian.
TensorOperator hermitian_part(const TensorOperator &op);

/// Full Hermitian eigendecomposition. `vectors` holds eigenvector k in
/// entries [k * n, (k + 1) * n); eigenvalues ascend.
struct EigenSystem {
  std::vector<double> values;
  std::vector<cplx> vectors;
  std::size_t n = 0;

  StateVector vector(std::size_t k, const Dims &dims) const;
};

/// Eigenvalues (ascending) of a Hermitian operator.
///
/// Householder reduction to a real symmetric tridiagonal matrix followed by
/// implicit-shift QL. The O(n^3) reduction runs under OpenMP.
std::vector<double> hermitian_eigenvalues(const TensorOperator &op,
                                          std::size_t max_side = kDefaultMaxSide);

/// Eigenvalues and eigenvectors of a Hermitian operator.
EigenSystem hermitian_eigensystem(const TensorOperator &op, std::size_t max_side = kDefaultMaxSide);

struct MinEig {
  double lambda_min = 0.0;
  StateVector eigvec;
};

/// Smallest eigenpair. The eigenvector is unit norm and its residual
/// ||X v - lambda v|| is checked against 10 * tol * max(1, ||X||).
MinEig hermitian_min_eig(const TensorOperator &op, double tol = kDefaultPsdTol,
                         std::size_t max_side = kDefaultMaxSide);

/// Smallest eigenvalue only (no eigenvector work).
double hermitian_lambda_min(const TensorOperator &op, std::size_t max_side = kDefaultMaxSide);

/// lambda_min >= -tol.
bool is_psd(const TensorOperator &op, double tol = kDefaultPsdTol,
            std::size_t max_side = kDefaultMaxSide);

}  // namespace multicopy

#endif  // MULTICOPY_EIGEN_HPP
