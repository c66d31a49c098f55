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

#include "multicopy/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "multicopy/errors.hpp"

namespace multicopy::ref {

TensorOperator kron(const TensorOperator &a, const TensorOperator &b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  TensorOperator out(dims);
  const std::size_t nb = b.side();
  for (std::size_t i = 0; i < a.side(); ++i)
    for (std::size_t j = 0; j < a.side(); ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

TensorOperator matmul(const TensorOperator &a, const TensorOperator &b) {
  const std::size_t n = a.side();
  TensorOperator out(a.dims());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

TensorOperator partial_trace(const TensorOperator &op, const std::vector<std::size_t> &keep) {
  const Dims &dims = op.dims();
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) kept.at(k) = true;
  Dims out_dims;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (kept[k]) out_dims.push_back(dims[k]);
  if (out_dims.empty()) out_dims.push_back(1);
  TensorOperator out(out_dims);

  std::vector<std::size_t> rd(dims.size()), cd(dims.size());
  for (std::size_t r = 0; r < op.side(); ++r) {
    unflatten_index(dims, r, rd);
    for (std::size_t c = 0; c < op.side(); ++c) {
      unflatten_index(dims, c, cd);
      bool diagonal_on_traced = true;
      std::size_t orow = 0, ocol = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (kept[k]) {
          orow = orow * dims[k] + rd[k];
          ocol = ocol * dims[k] + cd[k];
        } else if (rd[k] != cd[k]) {
          diagonal_on_traced = false;
        }
      }
      if (diagonal_on_traced) out(orow, ocol) += op(r, c);
    }
  }
  return out;
}

TensorOperator conjugate_by_permutation(const TensorOperator &op,
                                        const std::vector<std::size_t> &perm) {
  const TensorOperator p = permutation_operator(op.dims(), perm);
  return ref::matmul(ref::matmul(p, op), p.adjoint());
}

TensorOperator sym_extension(const LinearMap &m, std::size_t n_copies) {
  const std::size_t din = m.d_in();
  const std::size_t dout = m.d_out();
  // Choi with factors reordered to [out, in].
  TensorOperator lout(Dims{dout, din});
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t a = 0; a < dout; ++a)
      for (std::size_t j = 0; j < din; ++j)
        for (std::size_t b = 0; b < dout; ++b)
          lout(a * din + i, b * din + j) = m.choi()(i * dout + a, j * dout + b);

  Dims rest(n_copies - 1, din);
  TensorOperator first = lout;
  if (n_copies > 1) first = ref::kron(lout, TensorOperator::identity(rest));
  Dims dims{dout};
  for (std::size_t k = 0; k < n_copies; ++k) dims.push_back(din);
  first = first.reshaped(dims);

  TensorOperator acc(dims);
  for (std::size_t i = 1; i <= n_copies; ++i) {
    std::vector<std::size_t> perm(dims.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[1], perm[i]);
    acc += conjugate_by_permutation(first, perm);
  }
  acc *= 1.0 / static_cast<double>(n_copies);
  return acc;
}

std::vector<double> jacobi_eigenvalues(const TensorOperator &op) {
  const std::size_t n = op.side();
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const cplx z = op(r, c);
      a[r * m + c] = z.real();
      a[(r + n) * m + (c + n)] = z.real();
      a[r * m + (c + n)] = -z.imag();
      a[(r + n) * m + c] = z.imag();
    }

  double total = 0.0;
  for (double x : a) total += x * x;
  const double threshold = 1e-30 * std::max(1.0, total);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += a[p * m + q] * a[p * m + q];
    if (off < threshold) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = a[p * m + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * m + q] - a[p * m + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k * m + p];
          const double akq = a[k * m + q];
          a[k * m + p] = c * akp - s * akq;
          a[k * m + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p * m + k];
          const double aqk = a[q * m + k];
          a[p * m + k] = c * apk - s * aqk;
          a[q * m + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = a[i * m + i];
  std::sort(all.begin(), all.end());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = all[2 * i];
  return out;
}

}  // namespace multicopy::ref
