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

#include "multicopy/random.hpp"

#include <cmath>

namespace multicopy {

namespace {

cplx gaussian(Rng &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

StateVector random_state(const Dims &dims, Rng &rng) {
  StateVector v(dims);
  for (cplx &z : v.amplitudes()) z = gaussian(rng);
  return v.normalized();
}

TensorOperator random_hermitian(const Dims &dims, Rng &rng) {
  TensorOperator h(dims);
  const std::size_t n = h.side();
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = gaussian(rng).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      h(r, c) = gaussian(rng);
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

TensorOperator random_density(const Dims &dims, Rng &rng) {
  TensorOperator g(dims);
  for (cplx &z : g.entries()) z = gaussian(rng);
  TensorOperator rho = matmul(g, g.adjoint());
  rho *= 1.0 / rho.trace().real();
  return rho;
}

TensorOperator random_unitary(std::size_t d, Rng &rng) {
  std::vector<std::vector<cplx>> cols(d, std::vector<cplx>(d));
  for (auto &col : cols) {
    for (cplx &z : col) z = gaussian(rng);
  }
  for (std::size_t k = 0; k < d; ++k) {
    // Modified Gram-Schmidt; two passes keep the columns orthonormal to
    // machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        cplx dot = 0.0;
        for (std::size_t i = 0; i < d; ++i) dot += std::conj(cols[j][i]) * cols[k][i];
        for (std::size_t i = 0; i < d; ++i) cols[k][i] -= dot * cols[j][i];
      }
    }
    double nrm = 0.0;
    for (const cplx &z : cols[k]) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    for (cplx &z : cols[k]) z /= nrm;
  }
  TensorOperator u(Dims{d});
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) u(r, c) = cols[c][r];
  }
  return u;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace multicopy
