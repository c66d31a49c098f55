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
#include "multicopy/reference.hpp"
#include "test_util.hpp"

using namespace multicopy;
using multicopy::testing::random_matrix;
using multicopy::testing::random_permutation;

namespace {

LinearMap tmix(double p) {
  const LinearMap parts[] = {identity_map(2), transposition_map(2)};
  const double w[] = {1.0 - p, p};
  return mix(parts, w);
}

LinearMap choi_mixture(double p) {
  const LinearMap parts[] = {identity_map(3), choi_map_3()};
  const double w[] = {1.0 - p, p / 2.0};
  return mix(parts, w);
}

std::vector<LinearMap> tested_maps() {
  return {transposition_map(2), transposition_map(3), choi_map_3(), tmix(0.5), choi_mixture(0.9),
          depolarizing_to(2, 3, 1.0)};
}

// Tr_in[(I (x) xt) op] for xt = X^T, written out index by index.
TensorOperator contract_inputs(const ExtensionChoi &ext, const TensorOperator &xt) {
  const std::size_t dout = ext.op.dims()[0];
  const std::size_t nin = xt.side();
  TensorOperator out(Dims{dout});
  for (std::size_t a = 0; a < dout; ++a)
    for (std::size_t b = 0; b < dout; ++b)
      for (std::size_t p = 0; p < nin; ++p)
        for (std::size_t r = 0; r < nin; ++r) out(a, b) += xt(p, r) * ext.op(a * nin + r, b * nin + p);
  return out;
}

}  // namespace

TEST(extension, single_copy_is_reordered_choi) {
  for (const LinearMap &m : tested_maps()) {
    const ExtensionChoi ext = sym_extension_choi(m, 1);
    EXPECT_EQ(ext.op.dims(), (Dims{m.d_out(), m.d_in()}));
    for (std::size_t i = 0; i < m.d_in(); ++i)
      for (std::size_t a = 0; a < m.d_out(); ++a)
        for (std::size_t j = 0; j < m.d_in(); ++j)
          for (std::size_t b = 0; b < m.d_out(); ++b)
            EXPECT_EQ(ext.op(a * m.d_in() + i, b * m.d_in() + j), m.choi()(i * m.d_out() + a, j * m.d_out() + b));
  }
}

TEST(extension, matches_dense_permutation_reference) {
  for (const LinearMap &m : tested_maps()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      EXPECT_OPS_NEAR(sym_extension_choi(m, n).op, ref::sym_extension(m, n), 1e-13);
    }
  }
}

TEST(extension, qubit_transposition_two_copies) {
  const ExtensionChoi ext = sym_extension_choi(transposition_map(2), 2);
  EXPECT_EQ(ext.op.dims(), (Dims{2, 2, 2}));
  const TensorOperator s01 = kron(swap_operator(2), TensorOperator::identity(Dims{2}));
  const std::size_t swap12[] = {0, 2, 1};
  const TensorOperator s02 = permute_factors(s01, swap12);
  EXPECT_OPS_NEAR(ext.op, 0.5 * (s01 + s02), 1e-15);
  EXPECT_NEAR(hermitian_lambda_min(ext.op), -0.5, 1e-12);
}

TEST(extension, hermitian_and_permutation_invariant) {
  Rng rng(41);
  for (const LinearMap &m : {transposition_map(2), choi_map_3(), tmix(0.3)}) {
    const std::size_t n = m.d_in() == 2 ? 4 : 3;
    const ExtensionChoi ext = sym_extension_choi(m, n);
    EXPECT_TRUE(ext.op.is_hermitian(1e-11));
    for (int t = 0; t < 10; ++t) {
      std::vector<std::size_t> perm{0};
      for (std::size_t k : random_permutation(n, rng)) perm.push_back(k + 1);
      EXPECT_OPS_NEAR(permute_factors(ext.op, perm), ext.op, 1e-11);
    }
  }
}

TEST(extension, dimension_limit) {
  EXPECT_EQ(extension_side(transposition_map(3), 4), 243u);
  EXPECT_THROW(sym_extension_choi(transposition_map(2), 12), DimensionLimitError);
  try {
    sym_extension_choi(transposition_map(2), 5, 32);
    FAIL() << "expected DimensionLimitError";
  } catch (const DimensionLimitError &e) {
    EXPECT_EQ(e.requested(), 64u);
    EXPECT_NE(std::string(e.what()).find("64"), std::string::npos);
  }
  EXPECT_THROW(sym_extension_choi(transposition_map(2), 0), PreconditionError);
}

TEST(extension, apply_sym_extension_formula) {
  Rng rng(42);
  const LinearMap c = choi_map_3();
  const TensorOperator rho = random_density(Dims{3}, rng);
  const std::vector<TensorOperator> same(3, rho);
  EXPECT_OPS_NEAR(apply_sym_extension(c, same), apply(c, rho), 1e-13);
  const std::vector<TensorOperator> one{rho};
  EXPECT_OPS_NEAR(apply_sym_extension(c, one), apply(c, rho), 1e-14);

  // A traceless partner kills every term that traces it out.
  TensorOperator z = random_hermitian(Dims{3}, rng);
  z -= TensorOperator::identity(Dims{3}) * (z.trace() / 3.0);
  const TensorOperator sigma = random_density(Dims{3}, rng);
  const std::vector<TensorOperator> mixed{rho, z, sigma};
  EXPECT_OPS_NEAR(apply_sym_extension(c, mixed), apply(c, z) * (1.0 / 3.0), 1e-13);
  const std::vector<TensorOperator> pair{rho, sigma, sigma};
  EXPECT_OPS_NEAR(apply_sym_extension(c, pair), (apply(c, rho) + 2.0 * apply(c, sigma)) * (1.0 / 3.0), 1e-13);

  const std::vector<TensorOperator> wrong{TensorOperator(Dims{2})};
  EXPECT_THROW(apply_sym_extension(c, wrong), ShapeError);
}

TEST(extension, exactness_on_random_densities) {
  Rng rng(43);
  for (const LinearMap &m : {transposition_map(2), choi_map_3(), tmix(0.5)}) {
    for (std::size_t n : {2, 3}) {
      const ExtensionChoi ext = sym_extension_choi(m, n);
      for (int t = 0; t < 20; ++t) {
        const TensorOperator rho = random_density(Dims{m.d_in()}, rng);
        const std::vector<TensorOperator> copies(n, rho);
        EXPECT_OPS_NEAR(apply_sym_extension(m, copies), apply(m, rho), 1e-12);
        const TensorOperator power = kron_all(copies);
        EXPECT_OPS_NEAR(apply_extension(ext, power), apply(m, rho), 1e-11);
        EXPECT_OPS_NEAR(contract_inputs(ext, power.transpose()), apply(m, rho), 1e-11);
      }
    }
  }
}

TEST(extension, distinct_states_match_direct_formula) {
  Rng rng(44);
  const LinearMap m = choi_mixture(0.7);
  const ExtensionChoi ext = sym_extension_choi(m, 3);
  for (int t = 0; t < 5; ++t) {
    std::vector<TensorOperator> states;
    for (int k = 0; k < 3; ++k) states.push_back(random_matrix(Dims{3}, rng));
    EXPECT_OPS_NEAR(apply_extension(ext, kron_all(states)), apply_sym_extension(m, states), 1e-12);
  }
}

TEST(extension, tp_inheritance) {
  for (const LinearMap &m : {transposition_map(2), transposition_map(3), depolarizing_to(2, 3), tmix(0.4)}) {
    ASSERT_TRUE(is_trace_preserving(m));
    for (std::size_t n : {1, 2, 3}) {
      const ExtensionChoi ext = sym_extension_choi(m, n);
      std::vector<std::size_t> inputs;
      for (std::size_t k = 1; k <= n; ++k) inputs.push_back(k);
      EXPECT_OPS_NEAR(partial_trace(ext.op, inputs), TensorOperator::identity(Dims(n, m.d_in())), 1e-11);
    }
  }
}

TEST(extension, lambda_min_monotone_in_n) {
  for (const LinearMap &m : {transposition_map(2), transposition_map(3), choi_map_3(), tmix(0.5), choi_mixture(0.9)}) {
    double prev = -INFINITY;
    const std::size_t n_max = m.d_in() == 2 ? 5 : 4;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double lam = implementable(m, n).lambda_min;
      EXPECT_GE(lam, prev - 1e-9) << "N=" << n;
      prev = lam;
    }
  }
}

TEST(extension, implementable_examples) {
  const ImplementabilityReport t4 = implementable(transposition_map(2), 4);
  EXPECT_NEAR(t4.lambda_min, -0.25, 1e-12);
  EXPECT_FALSE(t4.psd);
  EXPECT_EQ(t4.n_copies, 4u);
  EXPECT_EQ(t4.dim, 32u);
  EXPECT_EQ(t4.tol, kDefaultPsdTol);
  EXPECT_TRUE(implementable(identity_map(3), 2).psd);
  EXPECT_TRUE(implementable(identity_map(2), 3).psd);

  // Mixture of identity and transposition at p = 0.5: the Choi is
  // [[1,0,0,1/2],[0,0,1/2,0],[0,1/2,0,0],[1/2,0,0,1]] with spectrum
  // {-1/2, 1/2, 1/2, 3/2}.
  const ImplementabilityReport r = implementable(tmix(0.5), 1);
  EXPECT_NEAR(r.lambda_min, -0.5, 1e-12);
  EXPECT_NEAR(r.lambda_min, ref::jacobi_eigenvalues(tmix(0.5).choi()).front(), 1e-12);
  EXPECT_FALSE(r.psd);
}

TEST(extension, cp_maps_are_always_implementable) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_TRUE(implementable(identity_map(2), n).psd);
    EXPECT_TRUE(implementable(depolarizing_to(2, 2), n).psd);
    EXPECT_TRUE(implementable(depolarizing_to(3, 2, 2.0), n).psd);
  }
}

TEST(extension, min_copies_examples) {
  const CopySearchResult id = min_copies(identity_map(2), 3);
  ASSERT_TRUE(id.min_n.has_value());
  EXPECT_EQ(*id.min_n, 1u);
  EXPECT_EQ(id.reports.size(), 1u);

  const CopySearchResult t = min_copies(transposition_map(2), 8);
  EXPECT_FALSE(t.min_n.has_value());
  ASSERT_EQ(t.reports.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(t.reports[k].lambda_min, -1.0 / static_cast<double>(k + 1), 1e-9);
  EXPECT_FALSE(t.aborted.has_value());

  const CopySearchResult cm = min_copies(choi_mixture(0.88), 3);
  ASSERT_TRUE(cm.min_n.has_value());
  EXPECT_EQ(*cm.min_n, 2u);
  EXPECT_FALSE(cm.reports[0].psd);
}

TEST(extension, min_copies_keeps_partial_reports_on_abort) {
  const CopySearchResult r = min_copies(transposition_map(2), 10, kDefaultPsdTol, 64);
  EXPECT_FALSE(r.min_n.has_value());
  EXPECT_EQ(r.reports.size(), 5u);
  ASSERT_TRUE(r.aborted.has_value());
  EXPECT_NE(r.aborted->find("128"), std::string::npos);
}

TEST(extension, critical_eta_a_examples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_NEAR(critical_eta_a(transposition_map(2), n), 2.0 / (static_cast<double>(n) + 2.0), 1e-8);
  }
  EXPECT_EQ(critical_eta_a(identity_map(2), 1), 0.0);
  EXPECT_EQ(critical_eta_a(depolarizing_to(3, 3), 2), 0.0);
  EXPECT_NEAR(critical_eta_a(transposition_map(3), 1), 0.75, 1e-10);

  const LinearMap parts[] = {identity_map(2)};
  const double zero[] = {0.0};
  EXPECT_THROW(critical_eta_a(mix(parts, zero), 1), PreconditionError);
}

TEST(extension, critical_eta_a_is_the_psd_boundary) {
  for (const LinearMap &m : {transposition_map(3), choi_map_3(), choi_mixture(0.95)}) {
    for (std::size_t n : {1, 2}) {
      const double eta = critical_eta_a(m, n);
      EXPECT_TRUE(implementable(noisy_a(m, eta), n, 1e-9).psd);
      if (eta > 1e-6) EXPECT_FALSE(implementable(noisy_a(m, eta - 1e-6), n, 1e-9).psd);
    }
  }
}

TEST(extension, critical_eta_b_examples) {
  EXPECT_NEAR(critical_eta_b(transposition_map(2), 2), 0.5, 2e-6);
  EXPECT_EQ(critical_eta_b(identity_map(2), 2), 0.0);
  for (const LinearMap &m : {transposition_map(2), transposition_map(3), choi_map_3(), choi_mixture(0.9)}) {
    for (std::size_t n : {1, 2, 3}) {
      const double eta = critical_eta_b(m, n);
      EXPECT_GE(eta, 0.0);
      EXPECT_LE(eta, eta_b_bound(m.d_in(), n) + 1e-6);
      EXPECT_TRUE(implementable(noisy_b(m, eta), n, 1e-9).psd);
    }
  }
}

TEST(extension, critical_eta_b_rejects_non_positive_maps) {
  const LinearMap parts[] = {identity_map(2)};
  const double w[] = {-1.0};
  EXPECT_THROW(critical_eta_b(mix(parts, w), 1), PreconditionError);
}
