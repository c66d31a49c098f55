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

#ifndef MULTICOPY_RANDOM_HPP
#define MULTICOPY_RANDOM_HPP

#include <cstdint>
#include <random>

#include "multicopy/tensor.hpp"

namespace multicopy {

using Rng = std::mt19937_64;

/// Complex Gaussian vector, normalized.
StateVector random_state(const Dims &dims, Rng &rng);

/// Hermitian matrix with i.i.d. complex Gaussian upper triangle.
TensorOperator random_hermitian(const Dims &dims, Rng &rng);

/// Density matrix G G^dagger / Tr(G G^dagger) with G complex Gaussian.
TensorOperator random_density(const Dims &dims, Rng &rng);

/// Haar-random unitary; column k is basis vector k. Gram-Schmidt on a complex
/// Gaussian matrix, which leaves the implied R factor with positive diagonal.
TensorOperator random_unitary(std::size_t d, Rng &rng);

/// Child seed for independent trials, via splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace multicopy

#endif  // MULTICOPY_RANDOM_HPP
