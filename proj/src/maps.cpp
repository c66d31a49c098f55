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

#include "multicopy/maps.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "multicopy/eigen.hpp"
#include "multicopy/errors.hpp"
#include "multicopy/random.hpp"

namespace multicopy {

namespace {

// Choi operator of the map whose action on |i><j| is `unit(i, j)`.
TensorOperator choi_from_action(std::size_t d_in, std::size_t d_out,
                                const std::function<TensorOperator(std::size_t, std::size_t)> &unit) {
  TensorOperator choi(Dims{d_in, d_out});
  for (std::size_t i = 0; i < d_in; ++i) {
    for (std::size_t j = 0; j < d_in; ++j) {
      const TensorOperator out = unit(i, j);
      for (std::size_t a = 0; a < d_out; ++a) {
        for (std::size_t b = 0; b < d_out; ++b) choi(i * d_out + a, j * d_out + b) = out(a, b);
      }
    }
  }
  return choi;
}

TensorOperator matrix_unit(std::size_t d, std::size_t i, std::size_t j) {
  TensorOperator e(Dims{d});
  e(i, j) = 1.0;
  return e;
}

void require_dim(std::size_t d, std::size_t min, const char *what) {
  if (d < min) {
    throw PreconditionError(std::string(what) + ": dimension must be >= " + std::to_string(min));
  }
}

void require_eta(double eta, const char *what) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw PreconditionError(std::string(what) + ": eta must lie in [0, 1]");
  }
}

}  // namespace

LinearMap::LinearMap(std::size_t d_in, std::size_t d_out, TensorOperator choi)
    : d_in_(d_in), d_out_(d_out), choi_(std::move(choi)) {
  require_dim(d_in_, 1, "LinearMap");
  require_dim(d_out_, 1, "LinearMap");
  if (choi_.side() != d_in_ * d_out_) {
    throw ShapeError("LinearMap: Choi side " + std::to_string(choi_.side()) + " != d_in*d_out " +
                     std::to_string(d_in_ * d_out_));
  }
  if (choi_.dims() != Dims{d_in_, d_out_}) choi_ = choi_.reshaped(Dims{d_in_, d_out_});
}

LinearMap transposition_map(std::size_t d) {
  require_dim(d, 2, "transposition_map");
  return LinearMap(d, d, swap_operator(d));
}

LinearMap identity_map(std::size_t d) {
  require_dim(d, 1, "identity_map");
  StateVector phi = maximally_entangled(d);
  TensorOperator choi = phi.projector() * static_cast<double>(d);
  return LinearMap(d, d, std::move(choi));
}

LinearMap choi_map_3() {
  // Which input diagonal entries feed each output diagonal entry.
  static constexpr int kFeeds[3][3] = {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
  auto unit = [](std::size_t i, std::size_t j) {
    TensorOperator out(Dims{3});
    if (i == j) {
      for (std::size_t a = 0; a < 3; ++a) out(a, a) = static_cast<double>(kFeeds[a][i]);
    } else {
      out(i, j) = -1.0;
    }
    return out;
  };
  return LinearMap(3, 3, choi_from_action(3, 3, unit));
}

LinearMap depolarizing_to(std::size_t d_in, std::size_t d_out, double scale) {
  require_dim(d_in, 1, "depolarizing_to");
  require_dim(d_out, 1, "depolarizing_to");
  TensorOperator choi = TensorOperator::identity(Dims{d_in, d_out});
  choi *= scale / static_cast<double>(d_out);
  return LinearMap(d_in, d_out, std::move(choi));
}

LinearMap mix(std::span<const LinearMap> maps, std::span<const double> weights) {
  if (maps.empty()) throw PreconditionError("mix: no maps");
  if (maps.size() != weights.size()) throw ShapeError("mix: maps and weights differ in length");
  const std::size_t d_in = maps[0].d_in();
  const std::size_t d_out = maps[0].d_out();
  TensorOperator choi(Dims{d_in, d_out});
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].d_in() != d_in || maps[k].d_out() != d_out) {
      throw ShapeError("mix: map " + std::to_string(k) + " has dimensions (" +
                       std::to_string(maps[k].d_in()) + "," + std::to_string(maps[k].d_out()) +
                       "), expected (" + std::to_string(d_in) + "," + std::to_string(d_out) + ")");
    }
    choi += maps[k].choi() * weights[k];
  }
  return LinearMap(d_in, d_out, std::move(choi));
}

LinearMap noisy_a(const LinearMap &m, double eta) {
  require_eta(eta, "noisy_a");
  const double c = m.choi().trace().real() / static_cast<double>(m.d_in() * m.d_out());
  TensorOperator choi = m.choi() * (1.0 - eta);
  for (std::size_t i = 0; i < choi.side(); ++i) choi(i, i) += eta * c;
  return LinearMap(m.d_in(), m.d_out(), std::move(choi));
}

LinearMap noisy_b(const LinearMap &m, double eta) {
  require_eta(eta, "noisy_b");
  // Lambda(I) = Tr_in L
  const TensorOperator image_of_identity = partial_trace(m.choi(), {1});
  TensorOperator noise = kron(TensorOperator::identity(Dims{m.d_in()}), image_of_identity);
  noise *= eta / static_cast<double>(m.d_in());
  TensorOperator choi = m.choi() * (1.0 - eta);
  choi += noise;
  return LinearMap(m.d_in(), m.d_out(), std::move(choi));
}

TensorOperator apply(const LinearMap &m, const TensorOperator &rho) {
  const std::size_t din = m.d_in();
  const std::size_t dout = m.d_out();
  if (rho.side() != din) {
    throw ShapeError("apply: input side " + std::to_string(rho.side()) + " != d_in " +
                     std::to_string(din));
  }
  const TensorOperator &L = m.choi();
  TensorOperator out(Dims{dout});
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t j = 0; j < din; ++j) {
      const cplx x = rho(i, j);
      if (x == cplx(0.0)) continue;
      for (std::size_t a = 0; a < dout; ++a) {
        for (std::size_t b = 0; b < dout; ++b) out(a, b) += x * L(i * dout + a, j * dout + b);
      }
    }
  }
  return out;
}

TensorOperator apply_adjoint(const LinearMap &m, const TensorOperator &y) {
  const std::size_t din = m.d_in();
  const std::size_t dout = m.d_out();
  if (y.side() != dout) throw ShapeError("apply_adjoint: operand side != d_out");
  const TensorOperator &L = m.choi();
  // Tr[Y Lambda(X)] = Tr[Lambda^dagger(Y) X]  =>  Lambda^dagger(Y)_ji = sum_ab Y_ba L[(i,a),(j,b)]
  TensorOperator out(Dims{din});
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t j = 0; j < din; ++j) {
      cplx s = 0.0;
      for (std::size_t a = 0; a < dout; ++a) {
        for (std::size_t b = 0; b < dout; ++b) s += y(b, a) * L(i * dout + a, j * dout + b);
      }
      out(j, i) = s;
    }
  }
  return out;
}

LinearMap compose(const LinearMap &after, const LinearMap &before) {
  if (before.d_out() != after.d_in()) {
    throw ShapeError("compose: inner dimensions differ (" + std::to_string(before.d_out()) +
                     " vs " + std::to_string(after.d_in()) + ")");
  }
  const std::size_t d = before.d_in();
  auto unit = [&](std::size_t i, std::size_t j) {
    return apply(after, apply(before, matrix_unit(d, i, j)));
  };
  return LinearMap(d, after.d_out(), choi_from_action(d, after.d_out(), unit));
}

bool is_trace_preserving(const LinearMap &m, double tol) {
  const TensorOperator reduced = partial_trace(m.choi(), {0});
  return max_abs_diff(reduced, TensorOperator::identity(Dims{m.d_in()})) <= tol;
}

bool is_unital(const LinearMap &m, double tol) {
  const TensorOperator image = partial_trace(m.choi(), {1});
  return max_abs_diff(image, TensorOperator::identity(Dims{m.d_out()})) <= tol;
}

std::optional<PositivityWitness> refute_positivity(const LinearMap &m, int restarts, int iters,
                                                   std::uint64_t seed) {
  if (restarts < 1 || iters < 1) throw PreconditionError("refute_positivity: restarts, iters >= 1");
  constexpr double kWitnessThreshold = -1e-10;
  std::optional<PositivityWitness> best;
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    StateVector psi = random_state(Dims{m.d_in()}, rng);
    StateVector phi(Dims{m.d_out()});
    double value = 0.0;
    for (int it = 0; it < iters; ++it) {
      const MinEig over_phi = hermitian_min_eig(apply(m, psi.projector()));
      phi = over_phi.eigvec;
      const MinEig over_psi = hermitian_min_eig(apply_adjoint(m, phi.projector()));
      const double prev = value;
      psi = over_psi.eigvec;
      value = over_psi.lambda_min;
      if (it > 0 && std::abs(prev - value) <= 1e-14 * std::max(1.0, std::abs(value))) break;
    }
    if (!best || value < best->value) best = PositivityWitness{psi, phi, value};
    if (best->value < kWitnessThreshold) return best;
  }
  return std::nullopt;
}

}  // namespace multicopy
