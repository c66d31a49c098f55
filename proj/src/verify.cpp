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

#include "multicopy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "multicopy/appendix.hpp"
#include "multicopy/criteria.hpp"
#include "multicopy/eigen.hpp"
#include "multicopy/errors.hpp"
#include "multicopy/extension.hpp"
#include "multicopy/maps.hpp"
#include "multicopy/random.hpp"
#include "multicopy/report.hpp"

namespace multicopy {

namespace {

struct Ctx {
  const VerifyOptions &opts;
  double tol(double pinned) const { return opts.tol_override.value_or(pinned); }
};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail_if(bool bad, const std::string &what) {
    if (bad) {
      passed = false;
      detail << "FAIL " << what << "; ";
    }
  }
  void note(const std::string &what) { detail << what << "; "; }
};

std::string sig(double v) { return format_sig(v, 12); }

LinearMap choi_mixture(double p) {
  const LinearMap parts[] = {identity_map(3), choi_map_3()};
  const double w[] = {1.0 - p, p / 2.0};
  return mix(parts, w);
}

LinearMap transposition_mixture(double p) {
  const LinearMap parts[] = {identity_map(2), transposition_map(2)};
  const double w[] = {1.0 - p, p};
  return mix(parts, w);
}

double ext_lambda_min(const LinearMap &m, std::size_t n, std::size_t max_side) {
  return hermitian_lambda_min(sym_extension_choi(m, n, max_side).op, max_side);
}

void qubit_transposition_spectrum(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-9);
  const LinearMap t2 = transposition_map(2);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const double lam = ext_lambda_min(t2, n, ctx.opts.max_side);
    const double err = std::abs(lam + 1.0 / static_cast<double>(n));
    worst = std::max(worst, err);
    out.fail_if(err > tol, "N=" + std::to_string(n) + " lambda_min=" + sig(lam));
  }
  out.note("max |lambda_min + 1/N| over N=1..8 = " + sig(worst) + " (tol " + sig(tol) + ")");
}

void critical_noise_qubit(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-8);
  const LinearMap t2 = transposition_map(2);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const double eta = critical_eta_a(t2, n, kDefaultPsdTol, ctx.opts.max_side);
    const double err = std::abs(eta - 2.0 / (static_cast<double>(n) + 2.0));
    worst = std::max(worst, err);
    out.fail_if(err > tol, "N=" + std::to_string(n) + " eta*=" + sig(eta));
  }
  out.note("max |eta* - 2/(N+2)| over N=1..6 = " + sig(worst) + " (tol " + sig(tol) + ")");
}

void qutrit_transposition(const Ctx &ctx, Outcome &out) {
  const LinearMap t3 = transposition_map(3);
  const double l1 = ext_lambda_min(t3, 1, ctx.opts.max_side);
  out.fail_if(std::abs(l1 + 1.0) > ctx.tol(1e-10), "N=1 lambda_min=" + sig(l1));
  out.note("N=1 lambda_min=" + sig(l1));
  for (std::size_t n = 2; n <= 5; ++n) {
    const double lam = ext_lambda_min(t3, n, ctx.opts.max_side);
    const double ref = -2.0 / static_cast<double>(n);
    out.fail_if(lam > ref + ctx.tol(1e-9), "N=" + std::to_string(n) + " lambda_min above -2/N");
    out.note("N=" + std::to_string(n) + " lambda_min=" + sig(lam) + " vs -2/N=" + sig(ref));
  }
}

void appendix_b(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-10);
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {2, 3}, {2, 6}, {3, 2}, {3, 4}, {4, 3}};
  double worst = 0.0;
  for (const auto &[d, n] : cases) {
    const EigvecCheck c = verify_transposition_eigvec(d, n, ctx.opts.max_side);
    worst = std::max(worst, c.residual_vs_expected);
    out.fail_if(c.residual_vs_expected > tol, "(d,N)=(" + std::to_string(d) + "," + std::to_string(n) +
                                                  ") residual=" + sig(c.residual_vs_expected));
  }
  out.note("max residual over 6 cases = " + sig(worst) + " (tol " + sig(tol) + ")");
}

void choi_map_necessity(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-9);
  const LinearMap c3 = choi_map_3();
  for (std::size_t n : {1, 5, 50}) {
    const TensorOperator op = necessity_operator(c3, n);
    const TensorOperator minor = principal_minor(op, {{0, 0}, {1, 1}, {2, 2}});
    const cplx det = determinant(minor);
    const NecessityReport r = necessity_check(c3, n, std::nullopt, ctx.tol(kDefaultPsdTol));
    out.fail_if(std::abs(det - cplx(-4.0, 0.0)) > tol, "N=" + std::to_string(n) + " det=" + sig(det.real()));
    out.fail_if(!r.conclusive_negative, "N=" + std::to_string(n) + " not conclusive");
    out.note("N=" + std::to_string(n) + " det=" + sig(det.real()) + " lambda_min=" + sig(r.lambda_min));
  }
}

void mixture_window(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-9);
  for (double p : {6.0 / 7.0, 0.9}) {
    const double lam = hermitian_lambda_min(choi_mixture(p).choi());
    const double ref = -(7.0 * p - 6.0) / 2.0;
    out.fail_if(std::abs(lam - ref) > tol, "p=" + sig(p) + " Choi lambda_min=" + sig(lam));
    out.note("p=" + sig(p) + " Choi lambda_min=" + sig(lam) + " vs " + sig(ref));
  }
  const ImplementabilityReport at88 = implementable(choi_mixture(0.88), 2, ctx.tol(kDefaultPsdTol), ctx.opts.max_side);
  const ImplementabilityReport at90 = implementable(choi_mixture(0.90), 2, ctx.tol(kDefaultPsdTol), ctx.opts.max_side);
  out.fail_if(!at88.psd, "p=0.88 N=2 not PSD");
  out.fail_if(at90.psd, "p=0.90 N=2 PSD");
  out.note("N=2 lambda_min p=0.88: " + sig(at88.lambda_min) + ", p=0.90: " + sig(at90.lambda_min));
}

void transposition_mixture_check(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-12);
  const LinearMap m = transposition_mixture(0.5);
  for (std::size_t n : {2, 10, 100}) {
    const NecessityReport r = necessity_check(m, n, std::nullopt, ctx.tol(kDefaultPsdTol));
    const TensorOperator minor = principal_minor(r.op, {{0, 1}, {1, 0}});
    const TensorOperator ref = TensorOperator::from_rows(
        {{0.0, 0.5}, {0.5, static_cast<double>(n) - 1.0}});
    const double err = max_abs_diff(minor, ref);
    out.fail_if(err > tol, "N=" + std::to_string(n) + " minor error " + sig(err));
    out.fail_if(!r.conclusive_negative, "N=" + std::to_string(n) + " not conclusive");
    out.note("N=" + std::to_string(n) + " lambda_min=" + sig(r.lambda_min) + " minor error " + sig(err));
  }
}

void noise_bound_sufficiency(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-9);
  std::vector<std::pair<std::string, LinearMap>> maps = {
      {"T2", transposition_map(2)}, {"T3", transposition_map(3)}, {"choi3", choi_map_3()}};
  for (std::uint64_t t = 0; t < 5; ++t) {
    Rng rng(derive_seed(ctx.opts.seed, 1000 + t));
    const double q = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const std::size_t which = t % 3;
    const std::size_t d = which == 0 ? 2 : 3;
    const LinearMap other = which == 0 ? transposition_map(2) : which == 1 ? transposition_map(3) : choi_map_3();
    const LinearMap parts[] = {identity_map(d), other};
    const double w[] = {1.0 - q, q};
    const std::string name = std::string(which == 2 ? "choi3" : which == 1 ? "T3" : "T2") + "@" + sig(q);
    maps.emplace_back("mix(id," + name + ")", mix(parts, w));
  }
  double worst = INFINITY;
  for (const auto &[name, m] : maps) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const LinearMap nb = noisy_b(m, eta_b_bound(m.d_in(), n));
      const LinearMap na = noisy_a(m, eta_a_bound(m.d_out(), m.d_in(), n));
      const ImplementabilityReport rb = implementable(nb, n, tol, ctx.opts.max_side);
      const ImplementabilityReport ra = implementable(na, n, tol, ctx.opts.max_side);
      worst = std::min({worst, rb.lambda_min, ra.lambda_min});
      out.fail_if(!rb.psd, name + " noisy_b N=" + std::to_string(n) + " lambda_min=" + sig(rb.lambda_min));
      out.fail_if(!ra.psd, name + " noisy_a N=" + std::to_string(n) + " lambda_min=" + sig(ra.lambda_min));
    }
  }
  out.note(std::to_string(maps.size()) + " maps x N=1..3 x 2 noise models, smallest lambda_min " + sig(worst) +
           " (tol " + sig(tol) + ")");
}

void appendix_a(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-12);
  const std::pair<LinearMap, std::size_t> cases[] = {
      {transposition_map(2), 2}, {transposition_map(2), 3}, {choi_map_3(), 2}};
  double worst = 0.0;
  for (const auto &[m, n] : cases) {
    const VOperator v = v_operator(m.d_in(), m.d_out(), n, ctx.opts.max_side);
    const TensorOperator lhs = phi_apply(v, sym_extension_choi(m, n, ctx.opts.max_side).op);
    const double err = max_abs_diff(lhs, necessity_operator(m, n));
    worst = std::max(worst, err);
    out.fail_if(err > tol, "d=" + std::to_string(m.d_in()) + " N=" + std::to_string(n) +
                               " congruence error " + sig(err));
  }
  out.note("max |V L_N V^dag - necessity op| = " + sig(worst));

  const double span_tol = ctx.tol(1e-11);
  double worst_span = 0.0;
  for (std::size_t d : {2, 3}) {
    for (std::size_t n : {2, 3}) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const SpanWitness w = a_span_decomposition(i, j, d, n, n + 2);
          worst_span = std::max(worst_span, w.recon_error);
          out.fail_if(w.recon_error > span_tol, "a_" + std::to_string(i) + std::to_string(j) + " d=" +
                                                    std::to_string(d) + " N=" + std::to_string(n) +
                                                    " recon_error " + sig(w.recon_error));
        }
      }
    }
  }
  out.note("max span recon_error = " + sig(worst_span));
}

void structural_invariants(const Ctx &ctx, Outcome &out) {
  const double tol = ctx.tol(1e-12);
  const std::size_t max_side = ctx.opts.max_side;

  // Extension exactness on random densities, for identical and distinct copies.
  double worst_exact = 0.0;
  const std::pair<LinearMap, std::size_t> exact_cases[] = {
      {transposition_map(2), 3}, {choi_map_3(), 2}, {transposition_mixture(0.5), 2}};
  std::uint64_t draw = 0;
  for (const auto &[m, n] : exact_cases) {
    const ExtensionChoi ext = sym_extension_choi(m, n, max_side);
    for (int k = 0; k < 20; ++k) {
      Rng rng(derive_seed(ctx.opts.seed, 2000 + draw++));
      const TensorOperator rho = random_density(Dims{m.d_in()}, rng);
      const std::vector<TensorOperator> same(n, rho);
      worst_exact = std::max(worst_exact, max_abs_diff(apply_extension(ext, kron_all(same, max_side)), apply(m, rho)));
      std::vector<TensorOperator> distinct;
      for (std::size_t c = 0; c < n; ++c) distinct.push_back(random_density(Dims{m.d_in()}, rng));
      worst_exact = std::max(worst_exact, max_abs_diff(apply_extension(ext, kron_all(distinct, max_side)),
                                                       apply_sym_extension(m, distinct)));
    }
  }
  out.fail_if(worst_exact > tol, "extension exactness error " + sig(worst_exact));
  out.note("extension exactness max error " + sig(worst_exact) + " over 60 densities");

  // lambda_min(L_N) non-decreasing in N.
  const double mono_tol = ctx.tol(1e-10);
  const std::pair<std::string, std::pair<LinearMap, std::size_t>> mono_cases[] = {
      {"T2", {transposition_map(2), 6}},
      {"T3", {transposition_map(3), 4}},
      {"choi3", {choi_map_3(), 4}},
      {"choi-mixture(0.9)", {choi_mixture(0.9), 4}},
      {"T-mixture(0.5)", {transposition_mixture(0.5), 5}}};
  for (const auto &[name, c] : mono_cases) {
    double prev = -INFINITY;
    for (std::size_t n = 1; n <= c.second; ++n) {
      const double lam = ext_lambda_min(c.first, n, max_side);
      out.fail_if(lam < prev - mono_tol, name + " lambda_min decreased at N=" + std::to_string(n));
      prev = lam;
    }
  }
  out.note("lambda_min monotone for 5 map families");

  // Trace preservation carries over to the extension.
  double worst_tp = 0.0;
  const std::pair<LinearMap, std::size_t> tp_cases[] = {{transposition_map(2), 3},
                                                        {transposition_map(3), 2},
                                                        {noisy_a(transposition_map(3), 0.3), 2},
                                                        {depolarizing_to(2, 3), 3}};
  for (const auto &[m, n] : tp_cases) {
    if (!is_trace_preserving(m, tol)) {
      out.fail_if(true, "fixture map is not trace preserving");
      continue;
    }
    const ExtensionChoi ext = sym_extension_choi(m, n, max_side);
    std::vector<std::size_t> inputs;
    for (std::size_t k = 1; k <= n; ++k) inputs.push_back(k);
    const TensorOperator tr_out = partial_trace(ext.op, inputs);
    worst_tp = std::max(worst_tp, max_abs_diff(tr_out, TensorOperator::identity(Dims(n, m.d_in()))));
  }
  out.fail_if(worst_tp > tol, "TP inheritance error " + sig(worst_tp));
  out.note("TP inheritance max error " + sig(worst_tp));
}

struct CheckDef {
  const char *id;
  const char *title;
  void (*run)(const Ctx &, Outcome &);
};

const CheckDef kChecks[] = {
    {"qubit-transposition-spectrum", "qubit transposition extension spectrum -1/N, N=1..8",
     qubit_transposition_spectrum},
    {"critical-noise-qubit", "critical white noise 2/(N+2) for the qubit transposition", critical_noise_qubit},
    {"qutrit-transposition", "qutrit transposition lambda_min at N=1 and upper bound -2/N", qutrit_transposition},
    {"appendix-b", "anti-symmetric eigenvectors of the transposition extension", appendix_b},
    {"choi-map-necessity", "necessary-condition minor of the Choi map has determinant -4", choi_map_necessity},
    {"mixture-window", "identity/Choi-map mixture: Choi spectrum and 2-copy window", mixture_window},
    {"transposition-mixture", "identity/transposition mixture fails the necessary condition",
     transposition_mixture_check},
    {"noise-bound-sufficiency", "noise bounds give implementable maps", noise_bound_sufficiency},
    {"appendix-a", "congruence V and power-operator span of a_ij", appendix_a},
    {"structural-invariants", "exactness, monotonicity in N, trace preservation", structural_invariants},
};

}  // namespace

const std::vector<std::string> &acceptance_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const CheckDef &c : kChecks) v.emplace_back(c.id);
    return v;
  }();
  return ids;
}

std::vector<CheckResult> run_acceptance(const VerifyOptions &opts) {
  std::vector<std::string> selected;
  if (!opts.only.empty()) {
    std::stringstream ss(opts.only);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      if (std::find(acceptance_ids().begin(), acceptance_ids().end(), tok) == acceptance_ids().end()) {
        throw PreconditionError("unknown check id '" + tok + "'");
      }
      selected.push_back(tok);
    }
    if (selected.empty()) throw PreconditionError("--only selects no checks");
  }

  const Ctx ctx{opts};
  std::vector<CheckResult> results;
  for (const CheckDef &c : kChecks) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    CheckResult r;
    r.id = c.id;
    r.title = c.title;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(ctx, out);
    } catch (const std::exception &e) {
      out.fail_if(true, std::string("exception: ") + e.what());
    }
    r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = out.passed;
    r.detail = out.detail.str();
    if (r.detail.size() >= 2) r.detail.resize(r.detail.size() - 2);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace multicopy
