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

#ifndef MULTICOPY_TENSOR_HPP
#define MULTICOPY_TENSOR_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace multicopy {

using cplx = std::complex<double>;
using Dims = std::vector<std::size_t>;

/// Default cap on the side of any dense operator built by the library.
inline constexpr std::size_t kDefaultMaxSide = 4096;

/// Default tolerance for positive-semidefiniteness decisions.
inline constexpr double kDefaultPsdTol = 1e-9;

/// Product of the entries of `dims` (1 for an empty list).
std::size_t dims_product(const Dims &dims);

/// Row-major multi-index <-> flat index conversion. Factor 0 is the most
/// significant digit; this ordering is used for every operator in the library.
std::size_t flatten_index(const Dims &dims, std::span<const std::size_t> digits);
void unflatten_index(const Dims &dims, std::size_t flat, std::span<std::size_t> digits);

/// Dense square complex matrix acting on a tensor product of subsystems.
///
/// `dims()` lists the subsystem dimensions; the matrix side is their product.
/// Entries are stored row-major. All entries are finite.
class TensorOperator {
 public:
  /// The 1x1 zero operator with dims {1}.
  TensorOperator();
  /// Zero operator on the given factorization.
  explicit TensorOperator(Dims dims);
  TensorOperator(Dims dims, std::vector<cplx> entries);

  static TensorOperator identity(Dims dims);
  static TensorOperator diagonal(std::span<const cplx> values);
  static TensorOperator diagonal(std::span<const double> values);
  /// Builds a single-factor operator from nested rows.
  static TensorOperator from_rows(const std::vector<std::vector<cplx>> &rows);

  const Dims &dims() const { return dims_; }
  std::size_t side() const { return side_; }
  std::size_t num_factors() const { return dims_.size(); }

  cplx &operator()(std::size_t r, std::size_t c) { return data_[r * side_ + c]; }
  const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * side_ + c]; }

  std::span<cplx> entries() { return data_; }
  std::span<const cplx> entries() const { return data_; }
  cplx *data() { return data_.data(); }
  const cplx *data() const { return data_.data(); }

  /// Same entries, different factorization of the same side.
  TensorOperator reshaped(Dims dims) const;

  TensorOperator adjoint() const;
  TensorOperator transpose() const;
  TensorOperator conjugate() const;
  cplx trace() const;
  /// Largest entry modulus.
  double max_abs() const;
  /// Frobenius norm; an upper bound on the spectral norm.
  double frobenius_norm() const;
  /// Entrywise Hermiticity test: |X_rc - conj(X_cr)| <= tol for all r, c.
  bool is_hermitian(double tol) const;

  TensorOperator &operator+=(const TensorOperator &other);
  TensorOperator &operator-=(const TensorOperator &other);
  TensorOperator &operator*=(cplx scale);

  friend TensorOperator operator+(TensorOperator a, const TensorOperator &b) { return a += b; }
  friend TensorOperator operator-(TensorOperator a, const TensorOperator &b) { return a -= b; }
  friend TensorOperator operator*(TensorOperator a, cplx s) { return a *= s; }
  friend TensorOperator operator*(cplx s, TensorOperator a) { return a *= s; }
  friend TensorOperator operator*(TensorOperator a, double s) { return a *= cplx(s); }
  friend TensorOperator operator*(double s, TensorOperator a) { return a *= cplx(s); }

 private:
  Dims dims_;
  std::size_t side_ = 1;
  std::vector<cplx> data_;
};

/// Dense complex vector on a tensor product space.
class StateVector {
 public:
  StateVector();
  explicit StateVector(Dims dims);
  StateVector(Dims dims, std::vector<cplx> amplitudes);

  /// Computational basis vector |digits>.
  static StateVector basis(Dims dims, std::span<const std::size_t> digits);

  const Dims &dims() const { return dims_; }
  std::size_t size() const { return data_.size(); }
  cplx &operator[](std::size_t i) { return data_[i]; }
  const cplx &operator[](std::size_t i) const { return data_[i]; }
  std::span<cplx> amplitudes() { return data_; }
  std::span<const cplx> amplitudes() const { return data_; }

  double norm() const;
  StateVector normalized() const;
  /// |v><w| with dims taken from v.
  TensorOperator outer(const StateVector &w) const;
  TensorOperator projector() const { return outer(*this); }

  StateVector &operator+=(const StateVector &other);
  StateVector &operator*=(cplx scale);

 private:
  Dims dims_;
  std::vector<cplx> data_;
};

/// <a|b>, conjugate-linear in the first argument.
cplx inner(const StateVector &a, const StateVector &b);
StateVector kron(const StateVector &a, const StateVector &b);
StateVector operator*(const TensorOperator &op, const StateVector &v);

/// Rectangular complex matrix between two tensor-factored spaces.
struct RectMatrix {
  Dims row_dims;
  Dims col_dims;
  std::vector<cplx> entries;  // row-major, rows() x cols()

  RectMatrix() = default;
  RectMatrix(Dims rows, Dims cols);

  std::size_t rows() const { return dims_product(row_dims); }
  std::size_t cols() const { return dims_product(col_dims); }
  cplx &operator()(std::size_t r, std::size_t c) { return entries[r * cols() + c]; }
  const cplx &operator()(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
};

/// Throws DimensionLimitError when `side` exceeds `max_side`.
void check_side(std::size_t side, std::size_t max_side, const char *what);

TensorOperator matmul(const TensorOperator &a, const TensorOperator &b);
double max_abs_diff(const TensorOperator &a, const TensorOperator &b);

/// Kronecker product; factors of `a` are the more significant ones.
TensorOperator kron(const TensorOperator &a, const TensorOperator &b,
                    std::size_t max_side = kDefaultMaxSide);
TensorOperator kron_all(std::span<const TensorOperator> ops, std::size_t max_side = kDefaultMaxSide);

/// Traces out every factor not listed in `keep`. The kept factors retain their
/// original relative order. An empty `keep` yields the 1x1 full trace.
TensorOperator partial_trace(const TensorOperator &op, std::vector<std::size_t> keep);

/// Permutation operator on factors with dimensions `dims`.
///
/// `perm[k]` is the position that factor k is sent to:
/// P |x_0> ... |x_{n-1}> places x_k in slot perm[k]. Permuted factors must
/// share a dimension.
TensorOperator permutation_operator(const Dims &dims, std::span<const std::size_t> perm);

/// P X P^dagger for the permutation operator P of `perm`, computed by
/// re-indexing. `dst += weight * P X P^dagger` when accumulating.
TensorOperator permute_factors(const TensorOperator &op, std::span<const std::size_t> perm);
void accumulate_permuted(TensorOperator &dst, const TensorOperator &src,
                         std::span<const std::size_t> perm, cplx weight);
StateVector permute_factors(const StateVector &v, std::span<const std::size_t> perm);

/// SWAP on C^d (x) C^d.
TensorOperator swap_operator(std::size_t d);

/// (1/sqrt d) sum_i |i>|i> with dims {d, d}.
StateVector maximally_entangled(std::size_t d);

/// V X V^dagger.
TensorOperator conjugate_by(const RectMatrix &v, const TensorOperator &x);

/// Submatrix <label_r| op |label_c> over computational-basis labels, each
/// label a digit tuple matching op.dims(). Result has dims {labels.size()}.
TensorOperator principal_minor(const TensorOperator &op,
                               const std::vector<std::vector<std::size_t>> &labels);

/// Determinant by partial-pivoting LU. Intended for small matrices.
cplx determinant(const TensorOperator &op);

}  // namespace multicopy

#endif  // MULTICOPY_TENSOR_HPP
