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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "multicopy/map_spec.hpp"
#include "test_util.hpp"

using namespace multicopy;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string &args, bool merge_stderr = false) {
  const std::string cmd =
      std::string("'") + MULTICOPY_CLI_PATH + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string &args, int expected_code = 0) {
  const CliRun r = run_cli(args + " --format json");
  EXPECT_EQ(r.code, expected_code) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(cli, analyze_transposition) {
  const CliRun r = run_cli("analyze --map transposition:d=2 --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-0.5"), std::string::npos);
  EXPECT_NE(r.out.find("not implementable"), std::string::npos);

  const nlohmann::json j = run_json("analyze --map transposition:d=2 --n 2");
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_NEAR(j["results"][0]["lambda_min"].get<double>(), -0.5, 1e-12);
  EXPECT_EQ(j["verdicts"]["implementable"], false);
  EXPECT_EQ(j["meta"]["seed"], 0);
}

TEST(cli, json_is_deterministic_apart_from_timestamp) {
  for (const std::string args : {"analyze --map choi3 --n 2 --seed 7", "sweep --map transposition:d=2 --n-max 3",
                                 "thresholds --map transposition:d=3 --n 2"}) {
    nlohmann::json a = run_json(args);
    nlohmann::json b = run_json(args);
    ASSERT_TRUE(a["meta"].contains("timestamp"));
    a["meta"].erase("timestamp");
    b["meta"].erase("timestamp");
    EXPECT_EQ(a.dump(), b.dump()) << args;
  }
}

TEST(cli, sweep_finds_minimal_copies) {
  const nlohmann::json j = run_json("sweep --map mix:[id:d=3@0.12,choi3@0.44] --n-max 3");
  EXPECT_EQ(j["verdicts"]["min_n"], 2);
  const nlohmann::json t = run_json("sweep --map transposition:d=2 --n-max 4");
  EXPECT_TRUE(t["verdicts"]["min_n"].is_null());
  ASSERT_EQ(t["results"].size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(t["results"][k]["lambda_min"].get<double>(), -1.0 / static_cast<double>(k + 1), 1e-9);
  }
}

TEST(cli, sweep_csv) {
  const std::string path = (std::filesystem::temp_directory_path() / "multicopy_cli_sweep.csv").string();
  const CliRun r = run_cli("sweep --map transposition:d=2 --n-max 2 --csv '" + path + "'");
  EXPECT_EQ(r.code, 0);
  FILE *f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::array<char, 256> line{};
  ASSERT_NE(std::fgets(line.data(), line.size(), f), nullptr);
  EXPECT_EQ(std::string(line.data()), "N,dim,lambda_min,psd,necessity_lambda_min,necessity_conclusive\n");
  int rows = 0;
  while (std::fgets(line.data(), line.size(), f) != nullptr) ++rows;
  std::fclose(f);
  EXPECT_EQ(rows, 2);
  std::remove(path.c_str());
}

TEST(cli, thresholds_values) {
  const nlohmann::json j = run_json("thresholds --map transposition:d=3 --n 1");
  EXPECT_NEAR(j["verdicts"]["eta_a_sufficient"].get<double>(), 27.0 / 28.0, 1e-12);
  EXPECT_NEAR(j["verdicts"]["eta_b_sufficient"].get<double>(), 0.9, 1e-12);
  EXPECT_NEAR(j["verdicts"]["critical_eta_a"].get<double>(), 0.75, 1e-6);
  EXPECT_NEAR(j["verdicts"]["transposition_eta_sufficient"].get<double>(), 0.9, 1e-12);
  EXPECT_NEAR(j["verdicts"]["transposition_eta_necessary_below"].get<double>(), 0.75, 1e-12);
  const nlohmann::json q = run_json("thresholds --map transposition:d=2 --n 4");
  EXPECT_NEAR(q["verdicts"]["critical_eta_a"].get<double>(), 1.0 / 3.0, 1e-6);
}

TEST(cli, dump_choi_round_trip) {
  const std::string path = (std::filesystem::temp_directory_path() / "multicopy_cli_choi.json").string();
  const CliRun r = run_cli("analyze --map 'noisy_b:(choi3):eta=0.3' --n 1 --dump-choi '" + path + "'");
  EXPECT_EQ(r.code, 0);
  const LinearMap back = load_choi(path);
  EXPECT_OPS_NEAR(back.choi(), noisy_b(choi_map_3(), 0.3).choi(), 1e-12);
  const CliRun again = run_cli("analyze --map @" + path + " --n 1");
  EXPECT_EQ(again.code, 0);
  std::remove(path.c_str());
}

TEST(cli, exit_codes) {
  EXPECT_EQ(run_cli("analyze --map bogus --n 1").code, 2);
  EXPECT_EQ(run_cli("analyze --map transposition --n 0").code, 2);
  EXPECT_EQ(run_cli("analyze --n 1").code, 2);
  EXPECT_EQ(run_cli("no-such-command").code, 2);
  EXPECT_EQ(run_cli("analyze --map transposition:d=2 --n 12").code, 3);
  const nlohmann::json partial = run_json("sweep --map transposition:d=2 --n-max 12 --max-dim 1024", 3);
  EXPECT_FALSE(partial["verdicts"]["aborted"].is_null());
  EXPECT_FALSE(partial["results"].empty());
}

TEST(cli, parse_errors_are_reported_by_field) {
  const CliRun r = run_cli("analyze --map transposition:d=1 --n 1", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("'d'"), std::string::npos);
}

TEST(cli, verify_paper_paths) {
  const CliRun ok = run_cli("verify-paper --only appendix-b");
  EXPECT_EQ(ok.code, 0);
  const CliRun strict = run_cli("verify-paper --only qubit-transposition-spectrum --tol 1e-15");
  EXPECT_EQ(strict.code, 1);
  const nlohmann::json j = run_json("verify-paper --only appendix-b,choi-map-necessity");
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["verdicts"]["all_passed"], true);
  EXPECT_EQ(run_cli("verify-paper --only nope").code, 2);
}
