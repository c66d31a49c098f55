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

#include "multicopy/extension.hpp"

#include <chrono>
#include <numeric>

#include "multicopy/eigen.hpp"
#include "multicopy/errors.hpp"

namespace multicopy {

namespace {

// Choi operator with factors reordered from [in, out] to [out, in].
TensorOperator choi_output_first(const LinearMap &m) {
  const std::size_t din = m.d_in();
  const std::size_t dout = m.d_out();
  const TensorOperator &L = m.choi();
  TensorOperator out(Dims{dout, din});
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t a = 0; a < dout; ++a) {
      for (std::size_t j = 0; j < din; ++j) {
        for (std::size_t b = 0; b < dout; ++b) out(a * din + i, b * din + j) = L(i * dout + a, j * dout + b);
      }
    }
  }
  return out;
}

Dims extension_dims(const LinearMap &m, std::size_t n_copies) {
  Dims dims{m.d_out()};
  dims.insert(dims.end(), n_copies, m.d_in());
  return dims;
}

}  // namespace

std::size_t extension_side(const LinearMap &m, std::size_t n_copies, std::size_t max_side) {
  if (n_copies < 1) throw PreconditionError("number of copies must be >= 1");
  std::size_t side = m.d_out();
  for (std::size_t k = 0; k < n_copies; ++k) {
    side *= m.d_in();
    if (side > max_side) {
      throw DimensionLimitError("N-copy extension with N=" + std::to_string(n_copies) + ", d_in=" +
                                    std::to_string(m.d_in()) + ", d_out=" + std::to_string(m.d_out()),
                                side, max_side);
    }
  }
  return side;
}

ExtensionChoi sym_extension_choi(const LinearMap &m, std::size_t n_copies, std::size_t max_side) {
  extension_side(m, n_copies, max_side);
  const Dims dims = extension_dims(m, n_copies);

  TensorOperator first = choi_output_first(m);
  if (n_copies > 1) {
    first = kron(first, TensorOperator::identity(Dims(n_copies - 1, m.d_in())), max_side);
  }
  first = first.reshaped(dims);

  TensorOperator acc(dims);
  const cplx weight = 1.0 / static_cast<double>(n_copies);
  std::vector<std::size_t> perm(dims.size());
  for (std::size_t i = 1; i <= n_copies; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[1], perm[i]);
    accumulate_permuted(acc, first, perm, weight);
  }
  return ExtensionChoi{n_copies, m, std::move(acc)};
}

TensorOperator apply_sym_extension(const LinearMap &m, std::span<const TensorOperator> states) {
  if (states.empty()) throw PreconditionError("apply_sym_extension: no input states");
  const std::size_t n = states.size();
  std::vector<cplx> traces(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (states[i].side() != m.d_in()) {
      throw ShapeError("apply_sym_extension: state " + std::to_string(i) + " has side " +
                       std::to_string(states[i].side()) + ", expected " + std::to_string(m.d_in()));
    }
    traces[i] = states[i].trace();
  }
  TensorOperator out(Dims{m.d_out()});
  for (std::size_t i = 0; i < n; ++i) {
    cplx others = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others *= traces[j];
    }
    if (others == cplx(0.0)) continue;
    out += apply(m, states[i]) * others;
  }
  out *= 1.0 / static_cast<double>(n);
  return out;
}

TensorOperator apply_extension(const ExtensionChoi &ext, const TensorOperator &x) {
  const std::size_t dout = ext.base.d_out();
  const std::size_t inner = ext.op.side() / dout;
  if (x.side() != inner) throw ShapeError("apply_extension: operand side mismatch");
  TensorOperator out(Dims{dout});
  for (std::size_t a = 0; a < dout; ++a) {
    for (std::size_t b = 0; b < dout; ++b) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < inner; ++r) {
        const cplx *row = ext.op.data() + (a * inner + r) * ext.op.side() + b * inner;
        for (std::size_t c = 0; c < inner; ++c) s += x(r, c) * row[c];
      }
      out(a, b) = s;
    }
  }
  return out;
}

ImplementabilityReport implementable(const LinearMap &m, std::size_t n_copies, double tol,
                                     std::size_t max_side) {
  const auto start = std::chrono::steady_clock::now();
  const ExtensionChoi ext = sym_extension_choi(m, n_copies, max_side);
  ImplementabilityReport r;
  r.n_copies = n_copies;
  r.lambda_min = hermitian_lambda_min(ext.op, max_side);
  r.tol = tol;
  r.psd = r.lambda_min >= -tol;
  r.dim = ext.op.side();
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CopySearchResult min_copies(const LinearMap &m, std::size_t n_max, double tol, std::size_t max_side) {
  if (n_max < 1) throw PreconditionError("min_copies: N_max must be >= 1");
  CopySearchResult result;
  for (std::size_t n = 1; n <= n_max; ++n) {
    try {
      result.reports.push_back(implementable(m, n, tol, max_side));
    } catch (const DimensionLimitError &e) {
      result.aborted = e.what();
      break;
    }
    if (result.reports.back().psd) {
      result.min_n = n;
      break;
    }
  }
  return result;
}

double critical_eta_a(const LinearMap &m, std::size_t n_copies, double tol, std::size_t max_side) {
  const double trace = m.choi().trace().real();
  if (!(trace > 0.0)) throw PreconditionError("critical_eta_a: requires Tr L > 0");
  const double c = trace / static_cast<double>(m.d_in() * m.d_out());
  const double lambda = hermitian_lambda_min(sym_extension_choi(m, n_copies, max_side).op, max_side);
  if (lambda >= -tol) return 0.0;
  return -lambda / (c - lambda);
}

double critical_eta_b(const LinearMap &m, std::size_t n_copies, const BisectionOptions &opts) {
  if (!(opts.width > 0.0)) throw PreconditionError("critical_eta_b: width must be positive");
  // The extension is linear in the map, so the eta family is an affine
  // combination of two fixed operators.
  const TensorOperator e0 = sym_extension_choi(m, n_copies, opts.max_side).op;
  const TensorOperator e1 = sym_extension_choi(noisy_b(m, 1.0), n_copies, opts.max_side).op;
  auto feasible = [&](double eta) {
    TensorOperator op = e0 * (1.0 - eta);
    op += e1 * eta;
    return hermitian_lambda_min(op, opts.max_side) >= -opts.psd_tol;
  };
  if (feasible(0.0)) return 0.0;
  if (!feasible(1.0)) {
    throw PreconditionError("critical_eta_b: extension is not PSD even at eta = 1; the map is not positive");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > opts.width) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace multicopy
