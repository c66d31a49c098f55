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

// multicopy: N-copy implementability analysis of linear maps.
//
//   multicopy analyze     --map SPEC --n N
//   multicopy sweep       --map SPEC --n-max N [--csv PATH]
//   multicopy thresholds  --map SPEC --n N
//   multicopy verify-paper [--tol X] [--only IDS]
//
// Exit codes: 0 success, 1 failed check or internal error, 2 bad input,
// 3 dimension limit.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "multicopy/criteria.hpp"
#include "multicopy/errors.hpp"
#include "multicopy/extension.hpp"
#include "multicopy/map_spec.hpp"
#include "multicopy/report.hpp"
#include "multicopy/verify.hpp"

namespace {

using multicopy::format_sig;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDimension = 3;

struct Options {
  std::string map;
  std::size_t n = 1;
  std::size_t n_max = 4;
  std::optional<double> eta;
  std::string noise = "a";
  double tol = multicopy::kDefaultPsdTol;
  std::size_t max_dim = multicopy::kDefaultMaxSide;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string dump_choi;
  std::string only;
  std::string csv;
  int basis_trials = 0;
  bool tol_given = false;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// The only wall-clock data in a report lives under meta.timestamp.
json make_report(const std::string &command, const std::vector<std::string> &argv, const Options &o,
                 const std::string &map, json params, json results, json verdicts, const Timer &timer,
                 json per_result_elapsed) {
  return {{"command", command},
          {"argv", argv},
          {"map", map},
          {"params", std::move(params)},
          {"results", std::move(results)},
          {"verdicts", std::move(verdicts)},
          {"meta",
           {{"version", multicopy::kVersion},
            {"seed", o.seed},
            {"tol", o.tol},
            {"timestamp",
             {{"utc", utc_now()},
              {"elapsed_s", timer.seconds()},
              {"per_result_elapsed_s", std::move(per_result_elapsed)}}}}}};
}

void emit_json(const json &report) { std::cout << report.dump(2) << "\n"; }

json null_or(const std::optional<std::size_t> &v) { return v ? json(*v) : json(nullptr); }

struct ResolvedMap {
  multicopy::MapSpec spec;
  std::string text;
  multicopy::LinearMap map;
};

ResolvedMap resolve_map(const Options &o) {
  if (o.map.empty()) throw multicopy::ParseError("map spec field 'map': --map is required");
  multicopy::MapSpec spec = multicopy::parse_map_spec(o.map);
  if (o.eta) {
    if (o.noise != "a" && o.noise != "b") {
      throw multicopy::ParseError("map spec field 'noise': expected 'a' or 'b', got '" + o.noise + "'");
    }
    multicopy::MapSpec wrapped;
    wrapped.kind = o.noise == "a" ? multicopy::MapSpec::Kind::kNoisyA : multicopy::MapSpec::Kind::kNoisyB;
    wrapped.params["eta"] = *o.eta;
    wrapped.children.push_back(std::move(spec));
    spec = std::move(wrapped);
  }
  multicopy::LinearMap m = multicopy::build_map(spec);
  if (!o.dump_choi.empty()) multicopy::save_choi(o.dump_choi, m);
  std::string text = multicopy::to_string(spec);
  return {std::move(spec), std::move(text), std::move(m)};
}

void require_copies(std::size_t n, const char *flag) {
  if (n < 1) throw multicopy::ParseError(std::string("option --") + flag + ": must be >= 1");
}

int cmd_analyze(const Options &o, const std::vector<std::string> &argv) {
  require_copies(o.n, "n");
  Timer timer;
  const ResolvedMap rm = resolve_map(o);
  const multicopy::ImplementabilityReport r = multicopy::implementable(rm.map, o.n, o.tol, o.max_dim);
  const multicopy::NecessityReport nec =
      o.basis_trials > 0 ? multicopy::necessity_basis_search(rm.map, o.n, o.basis_trials, o.seed, o.tol)
                         : multicopy::necessity_check(rm.map, o.n, std::nullopt, o.tol);

  if (o.format == "json") {
    json results = json::array({multicopy::to_json(r)});
    json verdicts = {{"implementable", r.psd},
                     {"necessity", multicopy::to_json(nec)},
                     {"necessity_conclusive_negative", nec.conclusive_negative}};
    json params = {{"n", o.n}, {"tol", o.tol}, {"max_dim", o.max_dim}, {"basis_trials", o.basis_trials}};
    emit_json(make_report("analyze", argv, o, rm.text, params, results, verdicts, timer,
                          json::array({r.elapsed_s})));
    return kExitOk;
  }
  std::cout << "map: " << rm.text << "  (d_in=" << rm.map.d_in() << ", d_out=" << rm.map.d_out() << ")\n";
  multicopy::TextTable t({"N", "dim", "lambda_min", "psd"});
  t.add_row({std::to_string(r.n_copies), std::to_string(r.dim), format_sig(r.lambda_min), r.psd ? "yes" : "no"});
  std::cout << t.render();
  std::cout << "necessary condition: lambda_min=" << format_sig(nec.lambda_min)
            << (nec.conclusive_negative ? "  (not N-copy implementable)" : "  (inconclusive)") << "\n";
  std::cout << "verdict: " << (r.psd ? "implementable" : "not implementable") << " with N=" << o.n
            << " copies at tol " << format_sig(o.tol, 3) << "\n";
  return kExitOk;
}

int cmd_sweep(const Options &o, const std::vector<std::string> &argv) {
  require_copies(o.n_max, "n-max");
  Timer timer;
  const ResolvedMap rm = resolve_map(o);
  const multicopy::CopySearchResult search = multicopy::min_copies(rm.map, o.n_max, o.tol, o.max_dim);

  // min_copies stops at the first PSD N; the table covers every N up to n_max
  // that fits under the dimension limit.
  std::vector<multicopy::ImplementabilityReport> rows = search.reports;
  std::optional<std::string> aborted = search.aborted;
  for (std::size_t n = rows.size() + 1; n <= o.n_max && !aborted; ++n) {
    try {
      rows.push_back(multicopy::implementable(rm.map, n, o.tol, o.max_dim));
    } catch (const multicopy::DimensionLimitError &e) {
      aborted = e.what();
    }
  }
  std::vector<multicopy::NecessityReport> nec;
  for (const auto &r : rows) nec.push_back(multicopy::necessity_check(rm.map, r.n_copies, std::nullopt, o.tol));

  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw multicopy::Error("cannot open '" + o.csv + "' for writing");
    csv << "N,dim,lambda_min,psd,necessity_lambda_min,necessity_conclusive\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      csv << rows[k].n_copies << "," << rows[k].dim << "," << format_sig(rows[k].lambda_min, 17) << ","
          << (rows[k].psd ? "true" : "false") << "," << format_sig(nec[k].lambda_min, 17) << ","
          << (nec[k].conclusive_negative ? "true" : "false") << "\n";
    }
  }

  if (o.format == "json") {
    json results = json::array();
    json elapsed = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      json row = multicopy::to_json(rows[k]);
      row["necessity"] = multicopy::to_json(nec[k]);
      results.push_back(std::move(row));
      elapsed.push_back(rows[k].elapsed_s);
    }
    json verdicts = {{"min_n", null_or(search.min_n)},
                     {"aborted", aborted ? json(*aborted) : json(nullptr)}};
    json params = {{"n_max", o.n_max}, {"tol", o.tol}, {"max_dim", o.max_dim}};
    emit_json(make_report("sweep", argv, o, rm.text, params, results, verdicts, timer, elapsed));
  } else {
    std::cout << "map: " << rm.text << "  (d_in=" << rm.map.d_in() << ", d_out=" << rm.map.d_out() << ")\n";
    multicopy::TextTable t({"N", "dim", "lambda_min", "psd", "necessity_lambda_min", "necessity_conclusive"});
    for (std::size_t k = 0; k < rows.size(); ++k) {
      t.add_row({std::to_string(rows[k].n_copies), std::to_string(rows[k].dim), format_sig(rows[k].lambda_min),
                 rows[k].psd ? "yes" : "no", format_sig(nec[k].lambda_min),
                 nec[k].conclusive_negative ? "yes" : "no"});
    }
    std::cout << t.render();
    std::cout << "min_n: " << (search.min_n ? std::to_string(*search.min_n) : "none") << "\n";
    if (aborted) std::cout << "aborted: " << *aborted << "\n";
  }
  return aborted ? kExitDimension : kExitOk;
}

int cmd_thresholds(const Options &o, const std::vector<std::string> &argv) {
  require_copies(o.n, "n");
  Timer timer;
  const ResolvedMap rm = resolve_map(o);
  const std::size_t d0 = rm.map.d_out();
  const std::size_t d1 = rm.map.d_in();

  json results = json::array();
  multicopy::TextTable t({"quantity", "value"});

  const double eta_a_bound = multicopy::eta_a_bound(d0, d1, o.n);
  results.push_back({{"name", "eta_a_sufficient"}, {"value", eta_a_bound}});
  t.add_row({"eta_a_sufficient", format_sig(eta_a_bound)});
  if (d1 >= 2) {
    const multicopy::ThresholdBounds b = multicopy::threshold_bounds(d0, d1, o.n);
    results.push_back({{"name", "eta_b_sufficient"}, {"value", b.eta_b_sufficient}});
    t.add_row({"eta_b_sufficient", format_sig(b.eta_b_sufficient)});
  }

  auto add_critical = [&](const char *name, auto &&fn) {
    try {
      const double v = fn();
      results.push_back({{"name", name}, {"value", v}});
      t.add_row({name, format_sig(v)});
    } catch (const multicopy::PreconditionError &e) {
      results.push_back({{"name", name}, {"value", nullptr}, {"reason", e.what()}});
      t.add_row({name, std::string("n/a: ") + e.what()});
    }
  };
  add_critical("critical_eta_a", [&] { return multicopy::critical_eta_a(rm.map, o.n, o.tol, o.max_dim); });
  add_critical("critical_eta_b", [&] {
    multicopy::BisectionOptions bo;
    bo.max_side = o.max_dim;
    return multicopy::critical_eta_b(rm.map, o.n, bo);
  });

  std::size_t d = 0;
  if (!o.eta && multicopy::is_transposition(rm.spec, &d)) {
    const multicopy::TranspositionBounds tb = multicopy::transposition_bounds(d, o.n);
    results.push_back({{"name", "transposition_eta_sufficient"}, {"value", tb.eta_sufficient}});
    results.push_back({{"name", "transposition_eta_necessary_below"}, {"value", tb.eta_necessary_below}});
    t.add_row({"transposition_eta_sufficient", format_sig(tb.eta_sufficient)});
    t.add_row({"transposition_eta_necessary_below", format_sig(tb.eta_necessary_below)});
  }

  if (o.format == "json") {
    json verdicts = json::object();
    for (const auto &r : results) verdicts[r["name"].get<std::string>()] = r["value"];
    json params = {{"n", o.n}, {"tol", o.tol}, {"max_dim", o.max_dim}};
    emit_json(make_report("thresholds", argv, o, rm.text, params, results, verdicts, timer, json::array()));
    return kExitOk;
  }
  std::cout << "map: " << rm.text << "  (d_in=" << d1 << ", d_out=" << d0 << "), N=" << o.n << "\n";
  std::cout << t.render();
  return kExitOk;
}

int cmd_verify(const Options &o, const std::vector<std::string> &argv) {
  Timer timer;
  multicopy::VerifyOptions vo;
  if (o.tol_given) vo.tol_override = o.tol;
  vo.only = o.only;
  vo.seed = o.seed;
  vo.max_side = o.max_dim;
  const std::vector<multicopy::CheckResult> results = multicopy::run_acceptance(vo);
  bool all = true;
  for (const auto &r : results) all = all && r.passed;

  if (o.format == "json") {
    json rows = json::array();
    json elapsed = json::array();
    json failed = json::array();
    for (const auto &r : results) {
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
      elapsed.push_back(r.elapsed_s);
      if (!r.passed) failed.push_back(r.id);
    }
    json params = {{"only", o.only}, {"tol_override", o.tol_given ? json(o.tol) : json(nullptr)}};
    emit_json(make_report("verify-paper", argv, o, "", params, rows, {{"all_passed", all}, {"failed", failed}},
                          timer, elapsed));
  } else {
    for (const auto &r : results) {
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.title << "\n       " << r.detail
                << "\n";
    }
    std::size_t passed = 0;
    for (const auto &r : results) passed += r.passed ? 1 : 0;
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  if (!all) {
    for (const auto &r : results) {
      if (!r.passed) std::cerr << "failed: " << r.id << "\n";
    }
  }
  return all ? kExitOk : kExitFailed;
}

void add_common(CLI::App *sub, Options &o) {
  sub->add_option("--tol", o.tol, "PSD tolerance (verify-paper: override every check tolerance)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-dim", o.max_dim, "largest dense matrix side")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "seed for randomized steps");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
}

void add_map(CLI::App *sub, Options &o) {
  sub->add_option("--map", o.map, "map spec, e.g. transposition:d=2 or @choi.json")->required();
  sub->add_option("--eta", o.eta, "wrap the map in noise of this strength");
  sub->add_option("--noise", o.noise, "noise model for --eta: a (white) or b (map's own output)");
  sub->add_option("--dump-choi", o.dump_choi, "write the resolved map's Choi operator as JSON");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"N-copy implementability of positive maps"};
  app.require_subcommand(1);
  Options o;

  CLI::App *analyze = app.add_subcommand("analyze", "PSD test of the N-copy extension");
  add_map(analyze, o);
  analyze->add_option("--n", o.n, "number of copies");
  analyze->add_option("--basis-trials", o.basis_trials, "random bases for the necessary-condition search");
  add_common(analyze, o);

  CLI::App *sweep = app.add_subcommand("sweep", "extension spectrum for N = 1..n-max");
  add_map(sweep, o);
  sweep->add_option("--n-max", o.n_max, "largest number of copies");
  sweep->add_option("--csv", o.csv, "also write the table as CSV");
  add_common(sweep, o);

  CLI::App *thresholds = app.add_subcommand("thresholds", "noise thresholds for N copies");
  add_map(thresholds, o);
  thresholds->add_option("--n", o.n, "number of copies");
  add_common(thresholds, o);

  CLI::App *verify = app.add_subcommand("verify-paper", "run the reproduction checks");
  verify->add_option("--only", o.only, "comma-separated check ids");
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitBadInput;
  }
  o.tol_given = verify->count("--tol") > 0;

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (analyze->parsed()) return cmd_analyze(o, args);
    if (sweep->parsed()) return cmd_sweep(o, args);
    if (thresholds->parsed()) return cmd_thresholds(o, args);
    if (verify->parsed()) return cmd_verify(o, args);
  } catch (const multicopy::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const multicopy::DimensionLimitError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const multicopy::PreconditionError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitFailed;
}
