// Copyright 2026 The sysgame Authors
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

#include "sysgame/cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sysgame/scenario.h"

namespace sysgame {
namespace {

using json = nlohmann::ordered_json;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string WriteTemp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path, std::ios::binary) << body;
  return path;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(ParseMatrixTest, JsonArray) {
  const PayoffMatrix m = ParseMatrix("[[3, -1], [-2, 4]]");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 0), -2.0);
  EXPECT_THROW(ParseMatrix("[[1, \"x\"]]"), std::invalid_argument);
  EXPECT_THROW(ParseMatrix("[[1, 2], [3]]"), std::invalid_argument);
  EXPECT_THROW(ParseMatrix("[1, 2]"), std::invalid_argument);
}

TEST(ParseMatrixTest, HeaderedCsv) {
  PayoffMatrix m = ParseMatrix("heads,tails\n1,-1\n-1,1\n");
  EXPECT_EQ(m.col_labels(), (std::vector<std::string>{"heads", "tails"}));
  EXPECT_EQ(m.row_labels(), (std::vector<std::string>{"r1", "r2"}));
  EXPECT_EQ(m(0, 1), -1.0);

  m = ParseMatrix("user,ask,date\nkeep,1,2\nhide,3,4\n");
  EXPECT_EQ(m.row_labels(), (std::vector<std::string>{"keep", "hide"}));
  EXPECT_EQ(m.col_labels(), (std::vector<std::string>{"ask", "date"}));
  EXPECT_EQ(m(1, 1), 4.0);

  EXPECT_THROW(ParseMatrix("a,b,c\n1,2\n"), std::invalid_argument);
  EXPECT_THROW(ParseMatrix("a,b\n1,x\n"), std::invalid_argument);
}

TEST(ParseDeviationVectorTest, Basics) {
  EXPECT_EQ(ParseDeviationVector("3,2").components(),
            (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(ParseDeviationVector(" 1, 0 ,4").components(),
            (std::vector<std::uint64_t>{1, 0, 4}));
  EXPECT_THROW(ParseDeviationVector("3,-2"), std::invalid_argument);
  EXPECT_THROW(ParseDeviationVector("3,,2"), std::invalid_argument);
  EXPECT_THROW(ParseDeviationVector("a"), std::invalid_argument);
}

TEST(CliScenarioTest, WritesCsvAndReport) {
  const std::string out_path = ::testing::TempDir() + "/cli_scenario.csv";
  const std::string cfg =
      WriteTemp("cli_scenario.json", R"({"t_max_hours": 24, "dt_hours": 1})");
  const CliResult r = Invoke({"scenario", "--config", cfg, "--out", out_path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  EXPECT_EQ(report["csv_rows_written"], 25);
  EXPECT_EQ(report["small_t"]["solution"]["method"], "pure_saddle");
  EXPECT_EQ(report["small_t"]["conceal_files_optimal"], true);
  const std::string csv = ReadText(out_path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kScenarioCsvHeader);

  const std::string swept_path = ::testing::TempDir() + "/cli_swept.csv";
  ASSERT_EQ(Invoke({"scenario", "--config", cfg, "--out", swept_path, "--sweep",
                    "--threads", "3"})
                .code,
            kExitOk);
  EXPECT_EQ(ReadText(swept_path), csv);
}

TEST(CliScenarioTest, UnknownKeyIsReported) {
  const std::string cfg = WriteTemp("cli_typo.json", R"({"quotta": 1})");
  const CliResult r = Invoke({"scenario", "--config", cfg, "--out", "x.csv"});
  EXPECT_EQ(r.code, kExitUsage);
  const json err = json::parse(r.err);
  EXPECT_EQ(err["error"]["type"], "config");
  EXPECT_EQ(err["error"]["key"], "quotta");
}

TEST(CliScenarioTest, UnwritableOutput) {
  const std::string cfg = WriteTemp("cli_ok.json", "{}");
  const CliResult r =
      Invoke({"scenario", "--config", cfg, "--out", "/nonexistent-dir/a.csv"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_EQ(json::parse(r.err)["error"]["type"], "io");
}

TEST(CliScenarioTest, MissingConfigFile) {
  const CliResult r = Invoke({"scenario", "--config", "/nonexistent/c.json"});
  EXPECT_EQ(r.code, kExitIo);
}

TEST(CliPayoffTest, PrettyAndJson) {
  CliResult r = Invoke({"payoff", "--t", "24"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("conceal_files"), std::string::npos);
  EXPECT_NE(r.out.find("pi_u = 0.2376"), std::string::npos);

  r = Invoke({"payoff", "--t", "24", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["pi_u"].get<double>(), 0.2376, 1e-12);
  EXPECT_EQ(j["matrix"][0][3], 0.005);
  EXPECT_EQ(j["saturated"], false);

  EXPECT_EQ(Invoke({"payoff", "--t", "-1"}).code, kExitUsage);
}

TEST(CliSolveTest, JsonAndCsvInput) {
  const std::string path = WriteTemp("m.json", "[[3,-1],[-2,4]]");
  CliResult r = Invoke({"solve", path, "--tol", "1e-9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_NEAR(j["solution"]["value"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["solution"]["row_mix"]["r1"].get<double>(), 0.6, 1e-9);
  EXPECT_EQ(j["saddle_points"].size(), 0u);

  const std::string csv = WriteTemp("m.csv", "left,right\n1,2\n3,4\n");
  r = Invoke({"solve", csv});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["solution"]["method"], "pure_saddle");
  EXPECT_EQ(j["saddle_points"][0], json::array({"r2", "left"}));
  EXPECT_EQ(j["row_dominance"]["strict_dominant"], "r2");
}

TEST(CliEntropyTest, Values) {
  CliResult r = Invoke({"entropy", "--d", "2,3", "--axis", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["path_count"], "10");
  EXPECT_EQ(j["gradients"][0]["relative_gradient"], "1");
  EXPECT_EQ(j["gradients"][0]["path_gradient"], "10");
  EXPECT_EQ(Invoke({"entropy", "--d", "2,3", "--axis", "3"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"entropy", "--d", ""}).code, kExitUsage);
}

TEST(CliWalkTest, CsvIsDeterministic) {
  const CliResult a =
      Invoke({"walk", "--dims", "3", "--steps", "40", "--seed", "5"});
  const CliResult b =
      Invoke({"walk", "--dims", "3", "--steps", "40", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "step,d1,d2,d3");
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "0,0,0,0");
}

TEST(CliDuelTest, AutomationWinsAllDay) {
  const CliResult r =
      Invoke({"duel", "--auto-exec", "0.0027777777777777779",
              "--human-decision", "0.05", "--human-exec", "0.05"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["duels"].size(), 24u);
  EXPECT_EQ(j["auto_wins_all"], true);

  const std::string cfg = WriteTemp(
      "duel.json", R"({"human": {"wait_override_hours": 0, "decision_hours": 0,
                                  "exec_hours": 0},
                       "auto": {"exec_hours": 0.01}})");
  const CliResult h = Invoke({"duel", "--config", cfg, "--t", "3"});
  ASSERT_EQ(h.code, kExitOk) << h.err;
  EXPECT_EQ(json::parse(h.out)["duels"][0]["winner"], "human");

  const std::string bad =
      WriteTemp("duel_bad.json", R"({"human": {"wait": 1}})");
  const CliResult e = Invoke({"duel", "--config", bad});
  EXPECT_EQ(e.code, kExitUsage);
  EXPECT_EQ(json::parse(e.err)["error"]["key"], "wait");
}

TEST(CliDistributionTest, TableAndSamples) {
  const std::string cfg = WriteTemp(
      "dist.json", R"({"gauss_amp": 0, "planck_amp": 1, "planck_temp": 1})");
  CliResult r = Invoke({"distribution", "--config", cfg, "--lambda-min", "0",
                        "--lambda-max", "1", "--points", "11"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], "lambda,density");
  EXPECT_EQ(lines[1], "0,0");

  r = Invoke(
      {"distribution", "--config", cfg, "--samples", "100", "--seed", "4"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, Invoke({"distribution", "--config", cfg, "--samples", "100",
                           "--seed", "4"})
                       .out);

  const std::string zero =
      WriteTemp("dist_zero.json", R"({"gauss_amp": 0, "planck_amp": 0})");
  r = Invoke({"distribution", "--config", zero, "--samples", "5"});
  EXPECT_NE(r.code, kExitOk);
  const std::string typo = WriteTemp("dist_typo.json", R"({"sigma": 1})");
  r = Invoke({"distribution", "--config", typo});
  EXPECT_EQ(json::parse(r.err)["error"]["key"], "sigma");
}

TEST(CliUsageTest, BadInvocations) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"bogus"}).code, kExitUsage);
  const CliResult r = Invoke({"payoff"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(json::parse(r.err)["error"]["type"], "usage");
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

// The installed binary: exit status and stderr as a shell sees them.
TEST(CliBinaryTest, ExitCodesAndErrorObject) {
  const std::string bin = SYSGAME_CLI_PATH;
  const std::string cfg = WriteTemp("bin_typo.json", R"({"quotta": 2})");
  const std::string err_path = ::testing::TempDir() + "/bin_err.txt";
  const std::string cmd =
      bin + " scenario --config " + cfg + " --out /dev/null 2> " + err_path;
  const int status = std::system(cmd.c_str());
  ASSERT_NE(status, -1);
  EXPECT_EQ(WEXITSTATUS(status), kExitUsage);
  const json err = json::parse(ReadText(err_path));
  EXPECT_EQ(err["error"]["key"], "quotta");

  const std::string ok = bin + " entropy --d 1,1,1 > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(ok.c_str())), 0);
}

}  // namespace
}  // namespace sysgame
