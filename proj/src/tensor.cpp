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

#include "multicopy/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "multicopy/errors.hpp"

namespace multicopy {

namespace {

// Below this side the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelSide = 64;

void require_finite(std::span<const cplx> data, const char *what) {
  for (const cplx &z : data) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw PreconditionError(std::string(what) + ": non-finite entry");
    }
  }
}

void validate_dims(const Dims &dims, const char *what) {
  if (dims.empty()) throw ShapeError(std::string(what) + ": dims list is empty");
  for (std::size_t d : dims) {
    if (d == 0) throw ShapeError(std::string(what) + ": zero subsystem dimension");
  }
}

// Strides such that flat = sum digit[k] * stride[k].
std::vector<std::size_t> strides_of(const Dims &dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

// Flat offsets, within the full space, of every multi-index over `factors`.
std::vector<std::size_t> offsets_over(const Dims &dims, const std::vector<std::size_t> &factors) {
  const auto strides = strides_of(dims);
  std::size_t count = 1;
  for (std::size_t f : factors) count *= dims[f];
  std::vector<std::size_t> out(count, 0);
  std::vector<std::size_t> digit(factors.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) off += digit[k] * strides[factors[k]];
    out[n] = off;
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++digit[k] < dims[factors[k]]) break;
      digit[k] = 0;
    }
  }
  return out;
}

// dest[x] = flat index of P|x> for the factor permutation `perm`.
std::vector<std::size_t> permutation_map(const Dims &dims, std::span<const std::size_t> perm) {
  const std::size_t n = dims.size();
  if (perm.size() != n) throw ShapeError("permutation length does not match number of factors");
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || seen[perm[k]]) throw PreconditionError("not a permutation");
    seen[perm[k]] = true;
    if (dims[k] != dims[perm[k]]) {
      throw ShapeError("permutation moves factor " + std::to_string(k) + " (dim " +
                       std::to_string(dims[k]) + ") onto a slot of dim " +
                       std::to_string(dims[perm[k]]));
    }
  }
  const auto strides = strides_of(dims);
  const std::size_t side = dims_product(dims);
  std::vector<std::size_t> dest(side);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t x = 0; x < side; ++x) {
    std::size_t y = 0;
    for (std::size_t k = 0; k < n; ++k) y += digit[k] * strides[perm[k]];
    dest[x] = y;
    for (std::size_t k = n; k-- > 0;) {
      if (++digit[k] < dims[k]) break;
      digit[k] = 0;
    }
  }
  return dest;
}

}  // namespace

std::size_t dims_product(const Dims &dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

std::size_t flatten_index(const Dims &dims, std::span<const std::size_t> digits) {
  if (digits.size() != dims.size()) throw ShapeError("digit count does not match dims");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] >= dims[k]) {
      throw PreconditionError("basis label digit " + std::to_string(digits[k]) +
                              " out of range for factor " + std::to_string(k));
    }
    flat = flat * dims[k] + digits[k];
  }
  return flat;
}

void unflatten_index(const Dims &dims, std::size_t flat, std::span<std::size_t> digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = flat % dims[k];
    flat /= dims[k];
  }
}

void check_side(std::size_t side, std::size_t max_side, const char *what) {
  if (side > max_side) throw DimensionLimitError(what, side, max_side);
}

// ---------------------------------------------------------------------------
// TensorOperator

TensorOperator::TensorOperator() : dims_{1}, side_(1), data_(1, cplx(0.0)) {}

TensorOperator::TensorOperator(Dims dims) : dims_(std::move(dims)) {
  validate_dims(dims_, "TensorOperator");
  side_ = dims_product(dims_);
  data_.assign(side_ * side_, cplx(0.0));
}

TensorOperator::TensorOperator(Dims dims, std::vector<cplx> entries)
    : dims_(std::move(dims)), data_(std::move(entries)) {
  validate_dims(dims_, "TensorOperator");
  side_ = dims_product(dims_);
  if (data_.size() != side_ * side_) {
    throw ShapeError("TensorOperator: " + std::to_string(data_.size()) +
                     " entries for side " + std::to_string(side_));
  }
  require_finite(data_, "TensorOperator");
}

TensorOperator TensorOperator::identity(Dims dims) {
  TensorOperator op(std::move(dims));
  for (std::size_t i = 0; i < op.side_; ++i) op(i, i) = 1.0;
  return op;
}

TensorOperator TensorOperator::diagonal(std::span<const cplx> values) {
  TensorOperator op(Dims{values.size()});
  for (std::size_t i = 0; i < values.size(); ++i) op(i, i) = values[i];
  require_finite(op.data_, "TensorOperator::diagonal");
  return op;
}

TensorOperator TensorOperator::diagonal(std::span<const double> values) {
  std::vector<cplx> c(values.begin(), values.end());
  return diagonal(std::span<const cplx>(c));
}

TensorOperator TensorOperator::from_rows(const std::vector<std::vector<cplx>> &rows) {
  const std::size_t n = rows.size();
  std::vector<cplx> data;
  data.reserve(n * n);
  for (const auto &row : rows) {
    if (row.size() != n) throw ShapeError("from_rows: matrix is not square");
    data.insert(data.end(), row.begin(), row.end());
  }
  return TensorOperator(Dims{n}, std::move(data));
}

TensorOperator TensorOperator::reshaped(Dims dims) const {
  if (dims_product(dims) != side_) throw ShapeError("reshaped: side mismatch");
  TensorOperator out = *this;
  validate_dims(dims, "reshaped");
  out.dims_ = std::move(dims);
  return out;
}

TensorOperator TensorOperator::adjoint() const {
  TensorOperator out(dims_);
  const std::size_t n = side_;
#pragma omp parallel for if (n > kParallelSide)
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = std::conj((*this)(c, r));
  }
  return out;
}

TensorOperator TensorOperator::transpose() const {
  TensorOperator out(dims_);
  for (std::size_t r = 0; r < side_; ++r) {
    for (std::size_t c = 0; c < side_; ++c) out(r, c) = (*this)(c, r);
  }
  return out;
}

TensorOperator TensorOperator::conjugate() const {
  TensorOperator out = *this;
  for (cplx &z : out.data_) z = std::conj(z);
  return out;
}

cplx TensorOperator::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < side_; ++i) t += (*this)(i, i);
  return t;
}

double TensorOperator::max_abs() const {
  double m = 0.0;
  for (const cplx &z : data_) m = std::max(m, std::abs(z));
  return m;
}

double TensorOperator::frobenius_norm() const {
  double s = 0.0;
  for (const cplx &z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool TensorOperator::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < side_; ++r) {
    for (std::size_t c = r; c < side_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

TensorOperator &TensorOperator::operator+=(const TensorOperator &other) {
  if (other.side_ != side_) throw ShapeError("operator+: side mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

TensorOperator &TensorOperator::operator-=(const TensorOperator &other) {
  if (other.side_ != side_) throw ShapeError("operator-: side mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

TensorOperator &TensorOperator::operator*=(cplx scale) {
  for (cplx &z : data_) z *= scale;
  return *this;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector() : dims_{1}, data_(1, cplx(0.0)) {}

StateVector::StateVector(Dims dims) : dims_(std::move(dims)) {
  validate_dims(dims_, "StateVector");
  data_.assign(dims_product(dims_), cplx(0.0));
}

StateVector::StateVector(Dims dims, std::vector<cplx> amplitudes)
    : dims_(std::move(dims)), data_(std::move(amplitudes)) {
  validate_dims(dims_, "StateVector");
  if (data_.size() != dims_product(dims_)) throw ShapeError("StateVector: length mismatch");
  require_finite(data_, "StateVector");
}

StateVector StateVector::basis(Dims dims, std::span<const std::size_t> digits) {
  StateVector v(dims);
  v[flatten_index(v.dims_, digits)] = 1.0;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx &z : data_) s += std::norm(z);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw PreconditionError("cannot normalize the zero vector");
  StateVector out = *this;
  out *= 1.0 / n;
  return out;
}

TensorOperator StateVector::outer(const StateVector &w) const {
  if (w.size() != size()) throw ShapeError("outer: length mismatch");
  TensorOperator op(dims_);
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) op(r, c) = data_[r] * std::conj(w.data_[c]);
  }
  return op;
}

StateVector &StateVector::operator+=(const StateVector &other) {
  if (other.size() != size()) throw ShapeError("StateVector +=: length mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

StateVector &StateVector::operator*=(cplx scale) {
  for (cplx &z : data_) z *= scale;
  return *this;
}

cplx inner(const StateVector &a, const StateVector &b) {
  if (a.size() != b.size()) throw ShapeError("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

StateVector kron(const StateVector &a, const StateVector &b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  StateVector out(std::move(dims));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

StateVector operator*(const TensorOperator &op, const StateVector &v) {
  if (op.side() != v.size()) throw ShapeError("matrix-vector: size mismatch");
  StateVector out(op.dims());
  const std::size_t n = op.side();
#pragma omp parallel for if (n > kParallelSide)
  for (std::size_t r = 0; r < n; ++r) {
    cplx s = 0.0;
    const cplx *row = op.data() + r * n;
    for (std::size_t c = 0; c < n; ++c) s += row[c] * v[c];
    out[r] = s;
  }
  return out;
}

RectMatrix::RectMatrix(Dims rows, Dims cols) : row_dims(std::move(rows)), col_dims(std::move(cols)) {
  validate_dims(row_dims, "RectMatrix");
  validate_dims(col_dims, "RectMatrix");
  entries.assign(this->rows() * this->cols(), cplx(0.0));
}

// ---------------------------------------------------------------------------
// Kernels

TensorOperator matmul(const TensorOperator &a, const TensorOperator &b) {
  if (a.side() != b.side()) throw ShapeError("matmul: side mismatch");
  const std::size_t n = a.side();
  TensorOperator out(a.dims());
#pragma omp parallel for if (n > kParallelSide)
  for (std::size_t i = 0; i < n; ++i) {
    double *orow = reinterpret_cast<double *>(out.data() + i * n);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      const double ar = aik.real();
      const double ai = aik.imag();
      const double *brow = reinterpret_cast<const double *>(b.data() + k * n);
      for (std::size_t j = 0; j < 2 * n; j += 2) {
        orow[j] += ar * brow[j] - ai * brow[j + 1];
        orow[j + 1] += ar * brow[j + 1] + ai * brow[j];
      }
    }
  }
  return out;
}

double max_abs_diff(const TensorOperator &a, const TensorOperator &b) {
  if (a.side() != b.side()) throw ShapeError("max_abs_diff: side mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

TensorOperator kron(const TensorOperator &a, const TensorOperator &b, std::size_t max_side) {
  const std::size_t na = a.side();
  const std::size_t nb = b.side();
  check_side(na * nb, max_side, "kron");
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  TensorOperator out(std::move(dims));
  const std::size_t n = na * nb;
#pragma omp parallel for if (n > kParallelSide)
  for (std::size_t ia = 0; ia < na; ++ia) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
      cplx *orow = out.data() + (ia * nb + ib) * n;
      for (std::size_t ja = 0; ja < na; ++ja) {
        const cplx x = a(ia, ja);
        if (x == cplx(0.0)) continue;
        const cplx *brow = b.data() + ib * nb;
        for (std::size_t jb = 0; jb < nb; ++jb) orow[ja * nb + jb] = x * brow[jb];
      }
    }
  }
  return out;
}

TensorOperator kron_all(std::span<const TensorOperator> ops, std::size_t max_side) {
  if (ops.empty()) throw PreconditionError("kron_all: empty list");
  TensorOperator acc = ops[0];
  for (std::size_t i = 1; i < ops.size(); ++i) acc = kron(acc, ops[i], max_side);
  return acc;
}

TensorOperator partial_trace(const TensorOperator &op, std::vector<std::size_t> keep) {
  const Dims &dims = op.dims();
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw PreconditionError("partial_trace: factor index " + std::to_string(k) + " out of range");
    }
  }
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!std::binary_search(keep.begin(), keep.end(), k)) traced.push_back(k);
  }
  Dims out_dims;
  for (std::size_t k : keep) out_dims.push_back(dims[k]);
  if (out_dims.empty()) out_dims.push_back(1);

  const auto keep_off = offsets_over(dims, keep);
  const auto trace_off = offsets_over(dims, traced);
  TensorOperator out(out_dims);
  const std::size_t n = op.side();
  const std::size_t m = keep_off.size();
#pragma omp parallel for if (n > kParallelSide)
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      cplx s = 0.0;
      for (std::size_t t : trace_off) s += op.data()[(keep_off[r] + t) * n + keep_off[c] + t];
      out(r, c) = s;
    }
  }
  return out;
}

TensorOperator permutation_operator(const Dims &dims, std::span<const std::size_t> perm) {
  validate_dims(dims, "permutation_operator");
  const auto dest = permutation_map(dims, perm);
  TensorOperator p(dims);
  for (std::size_t x = 0; x < dest.size(); ++x) p(dest[x], x) = 1.0;
  return p;
}

void accumulate_permuted(TensorOperator &dst, const TensorOperator &src,
                         std::span<const std::size_t> perm, cplx weight) {
  if (dst.side() != src.side()) throw ShapeError("accumulate_permuted: side mismatch");
  const auto dest = permutation_map(src.dims(), perm);
  const std::size_t n = src.side();
#pragma omp parallel for if (n > kParallelSide)
  for (std::size_t r = 0; r < n; ++r) {
    const cplx *srow = src.data() + r * n;
    cplx *drow = dst.data() + dest[r] * n;
    for (std::size_t c = 0; c < n; ++c) drow[dest[c]] += weight * srow[c];
  }
}

TensorOperator permute_factors(const TensorOperator &op, std::span<const std::size_t> perm) {
  TensorOperator out(op.dims());
  accumulate_permuted(out, op, perm, 1.0);
  return out;
}

StateVector permute_factors(const StateVector &v, std::span<const std::size_t> perm) {
  const auto dest = permutation_map(v.dims(), perm);
  StateVector out(v.dims());
  for (std::size_t x = 0; x < dest.size(); ++x) out[dest[x]] = v[x];
  return out;
}

TensorOperator swap_operator(std::size_t d) {
  if (d == 0) throw PreconditionError("swap_operator: d must be >= 1");
  const std::size_t perm[2] = {1, 0};
  return permutation_operator(Dims{d, d}, perm);
}

StateVector maximally_entangled(std::size_t d) {
  if (d == 0) throw PreconditionError("maximally_entangled: d must be >= 1");
  StateVector v(Dims{d, d});
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = a;
  return v;
}

TensorOperator conjugate_by(const RectMatrix &v, const TensorOperator &x) {
  const std::size_t rows = v.rows();
  const std::size_t cols = v.cols();
  if (cols != x.side()) {
    throw ShapeError("conjugate_by: V has " + std::to_string(cols) + " columns, X has side " +
                     std::to_string(x.side()));
  }
  // t = V X, rows x cols
  std::vector<cplx> t(rows * cols, cplx(0.0));
#pragma omp parallel for if (cols > kParallelSide)
  for (std::size_t i = 0; i < rows; ++i) {
    cplx *trow = t.data() + i * cols;
    for (std::size_t k = 0; k < cols; ++k) {
      const cplx vik = v(i, k);
      if (vik == cplx(0.0)) continue;
      const cplx *xrow = x.data() + k * cols;
      for (std::size_t j = 0; j < cols; ++j) trow[j] += vik * xrow[j];
    }
  }
  TensorOperator out(v.row_dims);
#pragma omp parallel for if (cols > kParallelSide)
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < cols; ++k) s += t[i * cols + k] * std::conj(v(j, k));
      out(i, j) = s;
    }
  }
  return out;
}

TensorOperator principal_minor(const TensorOperator &op,
                               const std::vector<std::vector<std::size_t>> &labels) {
  if (labels.empty()) throw PreconditionError("principal_minor: no labels");
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto &label : labels) idx.push_back(flatten_index(op.dims(), label));
  TensorOperator out(Dims{labels.size()});
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = op(idx[r], idx[c]);
  }
  return out;
}

cplx determinant(const TensorOperator &op) {
  const std::size_t n = op.side();
  std::vector<cplx> a(op.entries().begin(), op.entries().end());
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k])) piv = r;
    }
    if (a[piv * n + k] == cplx(0.0)) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx f = a[r * n + k] / a[k * n + k];
      for (std::size_t c = k; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
    }
  }
  return det;
}

}  // namespace multicopy
