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

#include "multicopy/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "multicopy/errors.hpp"

namespace multicopy {

namespace {

constexpr std::size_t kParallelSide = 64;
constexpr int kMaxQlIterations = 60;

struct Reflector {
  std::size_t offset = 0;  // acts on coordinates [offset, n)
  double tau = 0.0;        // H = I - tau v v^dagger
  std::vector<cplx> v;
};

// Hermitian tridiagonal form A = Q T Q^dagger with T made real symmetric by a
// diagonal phase: T = D R D^dagger, R real with diagonal `diag` and
// off-diagonal `off` (off[k] couples k and k+1).
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
  std::vector<cplx> phase;
  std::vector<Reflector> reflectors;
};

Tridiagonal tridiagonalize(const TensorOperator &herm, bool keep_reflectors) {
  const std::size_t n = herm.side();
  std::vector<cplx> a(herm.entries().begin(), herm.entries().end());
  Tridiagonal t;
  t.diag.assign(n, 0.0);
  t.off.assign(n, 0.0);
  t.phase.assign(n, cplx(1.0));
  std::vector<cplx> sub(n > 0 ? n - 1 : 0, cplx(0.0));
  std::vector<cplx> v;
  std::vector<cplx> p;

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // length of the column below the diagonal
    const std::size_t o = k + 1;
    double tail = 0.0;
    for (std::size_t i = o + 1; i < n; ++i) tail += std::norm(a[i * n + k]);
    const cplx x0 = a[o * n + k];
    if (tail == 0.0) {
      sub[k] = x0;
      continue;
    }
    const double xnorm = std::sqrt(tail + std::norm(x0));
    const double ax0 = std::abs(x0);
    const cplx ph = ax0 > 0.0 ? x0 / ax0 : cplx(1.0);
    const cplx beta = -ph * xnorm;

    v.assign(m, cplx(0.0));
    v[0] = x0 - beta;
    for (std::size_t i = 1; i < m; ++i) v[i] = a[(o + i) * n + k];
    double vnorm2 = 0.0;
    for (const cplx &z : v) vnorm2 += std::norm(z);
    const double tau = 2.0 / vnorm2;

    // p = tau * A22 v
    p.assign(m, cplx(0.0));
#pragma omp parallel for if (m > kParallelSide)
    for (std::size_t i = 0; i < m; ++i) {
      const cplx *row = a.data() + (o + i) * n + o;
      cplx s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += row[j] * v[j];
      p[i] = tau * s;
    }
    cplx vp = 0.0;
    for (std::size_t i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
    const double kfac = 0.5 * tau * vp.real();
    for (std::size_t i = 0; i < m; ++i) p[i] -= kfac * v[i];  // p is now q

    // A22 -= v q^dagger + q v^dagger
#pragma omp parallel for if (m > kParallelSide)
    for (std::size_t i = 0; i < m; ++i) {
      cplx *row = a.data() + (o + i) * n + o;
      const cplx vi = v[i];
      const cplx qi = p[i];
      for (std::size_t j = 0; j < m; ++j) row[j] -= vi * std::conj(p[j]) + qi * std::conj(v[j]);
    }

    sub[k] = beta;
    for (std::size_t i = o; i < n; ++i) {
      a[i * n + k] = 0.0;
      a[k * n + i] = 0.0;
    }
    if (keep_reflectors) t.reflectors.push_back(Reflector{o, tau, v});
  }
  if (n >= 2) sub[n - 2] = a[(n - 1) * n + (n - 2)];
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a[i * n + i].real();

  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double mag = std::abs(sub[k]);
    t.off[k] = mag;
    t.phase[k + 1] = mag > 0.0 ? t.phase[k] * (sub[k] / mag) : t.phase[k];
  }
  return t;
}

// Implicit-shift QL on a real symmetric tridiagonal matrix. `off[k]` couples
// k and k+1 and off[n-1] must be zero. When `z` is non-null it holds n rows of
// length n (initially the identity); row k ends as eigenvector k.
void tridiagonal_ql(std::vector<double> &d, std::vector<double> &off, std::vector<double> *z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  const double eps = std::numeric_limits<double>::epsilon();
  off[n - 1] = 0.0;
  double shift_total = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(off[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(off[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations) {
          throw ConvergenceError("tridiagonal QL did not converge");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * off[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = off[l] / (p + r);
        d[l + 1] = off[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        shift_total += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = off[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * off[i];
          h = c * p;
          r = std::hypot(p, off[i]);
          off[i + 1] = s * r;
          s = off[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (z != nullptr) {
            double *zi = z->data() + i * n;
            double *zi1 = z->data() + (i + 1) * n;
            for (std::size_t k = 0; k < n; ++k) {
              const double t = zi1[k];
              zi1[k] = s * zi[k] + c * t;
              zi[k] = c * zi[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * off[l] / dl1;
        off[l] = s * p;
        d[l] = c * p;
      } while (std::abs(off[l]) > eps * tst1);
    }
    d[l] += shift_total;
    off[l] = 0.0;
  }
}

}  // namespace

TensorOperator hermitian_part(const TensorOperator &op) {
  const double slack = kHermitianSlack * std::max(1.0, op.max_abs());
  if (!op.is_hermitian(slack)) {
    throw PreconditionError("operator is not Hermitian within " + std::to_string(slack));
  }
  TensorOperator h = op;
  const std::size_t n = op.side();
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = cplx(op(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (op(r, c) + std::conj(op(c, r)));
      h(r, c) = avg;
      h(c, r) = std::conj(avg);
    }
  }
  return h;
}

StateVector EigenSystem::vector(std::size_t k, const Dims &dims) const {
  std::vector<cplx> amp(vectors.begin() + static_cast<std::ptrdiff_t>(k * n),
                        vectors.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
  return StateVector(dims, std::move(amp));
}

std::vector<double> hermitian_eigenvalues(const TensorOperator &op, std::size_t max_side) {
  check_side(op.side(), max_side, "hermitian_eigenvalues");
  const TensorOperator h = hermitian_part(op);
  Tridiagonal t = tridiagonalize(h, false);
  tridiagonal_ql(t.diag, t.off, nullptr);
  std::sort(t.diag.begin(), t.diag.end());
  return t.diag;
}

EigenSystem hermitian_eigensystem(const TensorOperator &op, std::size_t max_side) {
  check_side(op.side(), max_side, "hermitian_eigensystem");
  const std::size_t n = op.side();
  const TensorOperator h = hermitian_part(op);
  Tridiagonal t = tridiagonalize(h, true);
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  tridiagonal_ql(t.diag, t.off, &z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return t.diag[x] < t.diag[y]; });

  EigenSystem es;
  es.n = n;
  es.values.resize(n);
  es.vectors.assign(n * n, cplx(0.0));
#pragma omp parallel for if (n > kParallelSide)
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    es.values[k] = t.diag[src];
    cplx *x = es.vectors.data() + k * n;
    // Row `src` of z holds the tridiagonal eigenvector in the real basis.
    for (std::size_t i = 0; i < n; ++i) x[i] = t.phase[i] * z[src * n + i];
    for (std::size_t r = t.reflectors.size(); r-- > 0;) {
      const Reflector &hr = t.reflectors[r];
      cplx dot = 0.0;
      for (std::size_t i = 0; i < hr.v.size(); ++i) dot += std::conj(hr.v[i]) * x[hr.offset + i];
      dot *= hr.tau;
      for (std::size_t i = 0; i < hr.v.size(); ++i) x[hr.offset + i] -= dot * hr.v[i];
    }
  }
  return es;
}

MinEig hermitian_min_eig(const TensorOperator &op, double tol, std::size_t max_side) {
  const EigenSystem es = hermitian_eigensystem(op, max_side);
  MinEig out;
  out.lambda_min = es.values.front();
  out.eigvec = es.vector(0, op.dims()).normalized();

  const StateVector av = op * out.eigvec;
  double res2 = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    res2 += std::norm(av[i] - out.lambda_min * out.eigvec[i]);
  }
  const double bound = 10.0 * tol * std::max(1.0, op.frobenius_norm());
  if (std::sqrt(res2) > bound) {
    throw ConvergenceError("eigenpair residual " + std::to_string(std::sqrt(res2)) +
                           " exceeds " + std::to_string(bound));
  }
  return out;
}

double hermitian_lambda_min(const TensorOperator &op, std::size_t max_side) {
  return hermitian_eigenvalues(op, max_side).front();
}

bool is_psd(const TensorOperator &op, double tol, std::size_t max_side) {
  return hermitian_lambda_min(op, max_side) >= -tol;
}

}  // namespace multicopy
