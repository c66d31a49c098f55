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

#ifndef MULTICOPY_REFERENCE_HPP
#define MULTICOPY_REFERENCE_HPP

// Serial reference implementations of the dense kernels.
//
// Each routine follows its defining formula directly, with no OpenMP and no
// shortcuts. They exist for the test suite (as independent oracles) and for
// the benchmark (as the serial baseline); library code never calls them.

#include <vector>

#include "multicopy/maps.hpp"
#include "multicopy/tensor.hpp"

namespace multicopy::ref {

/// (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l].
TensorOperator kron(const TensorOperator &a, const TensorOperator &b);

/// Triple-loop product.
TensorOperator matmul(const TensorOperator &a, const TensorOperator &b);

/// Partial trace by summing over every multi-index of the full space.
TensorOperator partial_trace(const TensorOperator &op, const std::vector<std::size_t> &keep);

/// P X P^dagger with P formed densely.
TensorOperator conjugate_by_permutation(const TensorOperator &op, const std::vector<std::size_t> &perm);

/// Symmetrized N-copy extension Choi operator with factor order
/// [d_out, d_in, ..., d_in], built from dense permutation products.
TensorOperator sym_extension(const LinearMap &m, std::size_t n_copies);

/// Eigenvalues of a Hermitian operator by cyclic Jacobi rotations on the
/// 2n x 2n real symmetric embedding [[Re, -Im], [Im, Re]]. Each eigenvalue of
/// the embedding appears twice; one copy of each is returned, ascending.
std::vector<double> jacobi_eigenvalues(const TensorOperator &op);

}  // namespace multicopy::ref

#endif  // MULTICOPY_REFERENCE_HPP
