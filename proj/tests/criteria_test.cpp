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

#include <gtest/gtest.h>

#include <cmath>

#include "multicopy/criteria.hpp"
#include "multicopy/eigen.hpp"
#include "multicopy/errors.hpp"
#include "multicopy/extension.hpp"
#include "multicopy/maps.hpp"
#include "multicopy/random.hpp"
#include "test_util.hpp"

using namespace multicopy;

namespace {

LinearMap tmix(double p) {
  const LinearMap parts[] = {identity_map(2), transposition_map(2)};
  const double w[] = {1.0 - p, p};
  return mix(parts, w);
}

// Seeded mixtures (1 - q) id + q X with X a transposition or the Choi map.
std::vector<LinearMap> random_positive_mixtures(std::uint64_t seed, int count) {
  std::vector<LinearMap> out;
  for (int t = 0; t < count; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const double q = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const int which = t % 3;
    const std::size_t d = which == 0 ? 2 : 3;
    const LinearMap parts[] = {identity_map(d), which == 0   ? transposition_map(2)
                                                : which == 1 ? transposition_map(3)
                                                             : choi_map_3()};
    const double w[] = {1.0 - q, q};
    out.push_back(mix(parts, w));
  }
  return out;
}

// sum_ij |i><j| (x) Lambda(|k_i><k_j|) + (N - 1) sum_{i>=1} |i><i| (x) Lambda(|k_0><k_0|),
// with the basis ket-bras placed on the input factor instead of coordinates.
TensorOperator necessity_literal(const LinearMap &m, std::size_t n, const TensorOperator &basis) {
  const std::size_t d = m.d_in();
  const std::size_t e = m.d_out();
  auto ketbra = [&](std::size_t u, std::size_t w) {
    TensorOperator out(Dims{d});
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, c) = basis(r, u) * std::conj(basis(c, w));
    return out;
  };
  TensorOperator op(Dims{d, e});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) op += kron(ketbra(i, j), apply(m, ketbra(i, j)));
  for (std::size_t i = 1; i < d; ++i) op += static_cast<double>(n - 1) * kron(ketbra(i, i), apply(m, ketbra(0, 0)));
  return op;
}

}  // namespace

TEST(criteria, eta_a_bound_examples) {
  EXPECT_NEAR(eta_a_bound(2, 2, 2), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(eta_a_bound(2, 2, 2, false), 0.8, 1e-15);
  EXPECT_NEAR(eta_a_bound(3, 3, 1), 27.0 / 28.0, 1e-15);
  const double n = 1e6;
  EXPECT_NEAR(eta_a_bound(3, 3, 1000000) * n / 27.0, 1.0, 1e-4);
  EXPECT_THROW(eta_a_bound(2, 2, 0), PreconditionError);
}

TEST(criteria, eta_b_bound_examples) {
  EXPECT_NEAR(eta_b_bound(2, 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(eta_b_bound(3, 6), 0.6, 1e-15);
  EXPECT_THROW(eta_b_bound(3, 0), PreconditionError);
  EXPECT_THROW(eta_b_bound(1, 2), PreconditionError);
}

TEST(criteria, threshold_bounds_invariants) {
  for (std::size_t d0 : {1, 2, 3}) {
    for (std::size_t d1 : {2, 3, 4}) {
      double prev_a = 1.0, prev_b = 1.0;
      for (std::size_t n = 1; n <= 20; ++n) {
        const ThresholdBounds b = threshold_bounds(d0, d1, n);
        EXPECT_GT(b.eta_a_sufficient, 0.0);
        EXPECT_LT(b.eta_a_sufficient, 1.0);
        EXPECT_GT(b.eta_b_sufficient, 0.0);
        EXPECT_LT(b.eta_b_sufficient, 1.0);
        EXPECT_LE(b.eta_b_sufficient, b.eta_a_sufficient);
        EXPECT_LT(b.eta_a_sufficient, prev_a);
        EXPECT_LT(b.eta_b_sufficient, prev_b);
        EXPECT_EQ(b.used_qubit_improvement, d1 == 2);
        prev_a = b.eta_a_sufficient;
        prev_b = b.eta_b_sufficient;
      }
    }
  }
}

TEST(criteria, transposition_bounds_examples) {
  const TranspositionBounds b23 = transposition_bounds(2, 3);
  EXPECT_NEAR(b23.eta_sufficient, 4.0 / 7.0, 1e-15);
  EXPECT_NEAR(b23.eta_necessary_below, 0.4, 1e-15);
  EXPECT_NEAR(transposition_bounds(3, 1).eta_necessary_below, 0.75, 1e-15);
  EXPECT_NEAR(transposition_bounds(3, 1).eta_sufficient, 0.9, 1e-15);
  EXPECT_NEAR(transposition_bounds(3, 2).eta_necessary_below, 0.75, 1e-15);
  EXPECT_NEAR(transposition_bounds(3, 3).eta_necessary_below, 2.0 / 3.0, 1e-15);
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t n = 1; n <= 10; ++n) {
      const TranspositionBounds b = transposition_bounds(d, n);
      EXPECT_LE(b.eta_necessary_below, b.eta_sufficient);
    }
  EXPECT_THROW(transposition_bounds(1, 1), PreconditionError);
}

TEST(criteria, sufficient_bounds_give_implementable_maps) {
  std::vector<LinearMap> maps = {transposition_map(2), transposition_map(3), choi_map_3()};
  for (LinearMap &m : random_positive_mixtures(99, 5)) maps.push_back(std::move(m));
  for (const LinearMap &m : maps) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const ImplementabilityReport rb = implementable(noisy_b(m, eta_b_bound(m.d_in(), n)), n, 1e-9);
      const ImplementabilityReport ra = implementable(noisy_a(m, eta_a_bound(m.d_out(), m.d_in(), n)), n, 1e-9);
      EXPECT_TRUE(rb.psd) << "noisy_b N=" << n << " lambda_min=" << rb.lambda_min;
      EXPECT_TRUE(ra.psd) << "noisy_a N=" << n << " lambda_min=" << ra.lambda_min;
    }
  }
}

TEST(criteria, necessary_bound_for_transposition) {
  const std::pair<std::size_t, std::size_t> grid[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                      {3, 1}, {3, 2}, {3, 3}, {3, 4}};
  for (const auto &[d, n] : grid) {
    const double eta = transposition_bounds(d, n).eta_necessary_below - 1e-3;
    EXPECT_FALSE(implementable(noisy_a(transposition_map(d), eta), n).psd) << "d=" << d << " N=" << n;
  }
}

TEST(criteria, critical_eta_b_sandwich) {
  std::vector<LinearMap> maps = {transposition_map(2), transposition_map(3), choi_map_3()};
  for (LinearMap &m : random_positive_mixtures(7, 3)) maps.push_back(std::move(m));
  for (const LinearMap &m : maps) {
    for (std::size_t n : {1, 2}) {
      const double eta = critical_eta_b(m, n);
      EXPECT_GE(eta, 0.0);
      EXPECT_LE(eta, eta_b_bound(m.d_in(), n) + 1e-6);
    }
  }
}

TEST(criteria, necessity_single_copy_is_choi) {
  for (const LinearMap &m : {transposition_map(3), choi_map_3(), tmix(0.2)}) {
    EXPECT_OPS_NEAR(necessity_operator(m, 1), m.choi(), 0.0);
  }
}

TEST(criteria, necessity_minors) {
  for (std::size_t n : {1, 2, 7, 50}) {
    const TensorOperator t = necessity_operator(transposition_map(2), n);
    EXPECT_OPS_NEAR(principal_minor(t, {{0, 1}, {1, 0}}),
                    TensorOperator::from_rows({{0.0, 1.0}, {1.0, static_cast<double>(n) - 1.0}}), 1e-12);
    const TensorOperator c = necessity_operator(choi_map_3(), n);
    const TensorOperator minor = principal_minor(c, {{0, 0}, {1, 1}, {2, 2}});
    const double nn = static_cast<double>(n);
    EXPECT_OPS_NEAR(minor, TensorOperator::from_rows({{1.0, -1.0, -1.0}, {-1.0, nn, -1.0}, {-1.0, -1.0, 1.0}}), 1e-12);
    EXPECT_NEAR(determinant(minor).real(), -4.0, 1e-9);
  }
}

TEST(criteria, necessity_check_examples) {
  EXPECT_TRUE(necessity_check(tmix(0.5), 10).conclusive_negative);
  EXPECT_TRUE(necessity_check(choi_map_3(), 100).conclusive_negative);
  for (std::size_t n : {1, 3, 20}) {
    const NecessityReport r = necessity_check(identity_map(3), n);
    EXPECT_FALSE(r.conclusive_negative);
    EXPECT_GE(r.lambda_min, -1e-9);
  }
  const NecessityReport r = necessity_check(choi_map_3(), 3, std::nullopt, 1e-9);
  EXPECT_EQ(r.n_copies, 3u);
  EXPECT_LT(r.lambda_min, -1e-9);
  EXPECT_OPS_NEAR(r.basis, TensorOperator::identity(Dims{3}), 0.0);
}

TEST(criteria, necessity_is_sound) {
  // conclusive_negative must imply non-implementability.
  std::vector<LinearMap> maps = {transposition_map(2), transposition_map(3), choi_map_3(), tmix(0.5), tmix(0.1)};
  for (LinearMap &m : random_positive_mixtures(5, 6)) maps.push_back(std::move(m));
  for (const LinearMap &m : maps) {
    for (std::size_t n = 1; n <= 4; ++n) {
      if (necessity_check(m, n).conclusive_negative) EXPECT_FALSE(implementable(m, n).psd) << "N=" << n;
    }
  }
}

TEST(criteria, necessity_custom_basis_matches_literal_form) {
  Rng rng(51);
  for (const LinearMap &m : {transposition_map(3), choi_map_3()}) {
    const TensorOperator u = random_unitary(3, rng);
    const TensorOperator coords = necessity_operator(m, 4, u);
    const TensorOperator literal = necessity_literal(m, 4, u);
    EXPECT_NEAR(hermitian_lambda_min(coords), hermitian_lambda_min(literal), 1e-10);
    // literal = (U (x) I) coords (U (x) I)^dagger.
    const TensorOperator w = kron(u, TensorOperator::identity(Dims{3}));
    EXPECT_OPS_NEAR(matmul(w.adjoint(), matmul(literal, w)), coords, 1e-12);
  }
}

TEST(criteria, necessity_rejects_non_orthonormal_basis) {
  TensorOperator b = TensorOperator::identity(Dims{2});
  b(0, 1) = 0.1;
  EXPECT_THROW(necessity_operator(transposition_map(2), 2, b), PreconditionError);
  EXPECT_THROW(necessity_operator(transposition_map(2), 2, TensorOperator::identity(Dims{3})), PreconditionError);
  EXPECT_THROW(necessity_operator(transposition_map(2), 0), PreconditionError);
}

TEST(criteria, basis_search) {
  const NecessityReport comp = necessity_check(transposition_map(3), 2);
  const NecessityReport best = necessity_basis_search(transposition_map(3), 2, 20, 3);
  EXPECT_LE(best.lambda_min, comp.lambda_min + 1e-12);
  EXPECT_TRUE(best.conclusive_negative);
  EXPECT_TRUE(necessity_basis_search(choi_map_3(), 5, 5, 1).conclusive_negative);
  const NecessityReport id = necessity_basis_search(identity_map(2), 3, 10, 2);
  EXPECT_FALSE(id.conclusive_negative);
  // Deterministic for a fixed seed.
  EXPECT_EQ(necessity_basis_search(transposition_map(3), 2, 5, 9).lambda_min,
            necessity_basis_search(transposition_map(3), 2, 5, 9).lambda_min);
  EXPECT_THROW(necessity_basis_search(identity_map(2), 2, 0), PreconditionError);
}
