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

#ifndef SYSGAME_SCENARIO_H_
#define SYSGAME_SCENARIO_H_

// Scenario runs: a JSON config in, a CSV time series and solved-game
// summaries out.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sysgame/game.h"
#include "sysgame/payoff.h"

namespace sysgame {

// Bad configuration. key() names the offending field ("" when the problem
// is with the document as a whole).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  ScenarioParams params;
  double t_max_hours = 24.0;
  double dt_hours = 1.0;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string output;
};

// Accepted keys: every ScenarioParams field by name plus t_max_hours,
// dt_hours, tol, seed and output. Missing keys keep their defaults; any
// other key is rejected. Validation runs before anything is returned.
ScenarioConfig ParseScenarioConfig(const nlohmann::ordered_json& doc);
ScenarioConfig LoadScenarioConfig(const std::string& path);
void Validate(const ScenarioConfig& config);

// t_k = k * dt for k = 0..floor(t_max / dt).
std::vector<double> TimeGrid(const ScenarioConfig& config);

struct ScenarioRow {
  double t = 0.0;
  PayoffBreakdown payoffs;
  double maximin = 0.0;
  double minimax = 0.0;
  bool saddle_exists = false;
};

// One grid point, evaluated on RegimeMatrix(t, params).
ScenarioRow EvaluateRow(double t_hours, const ScenarioParams& params);

inline constexpr const char* kScenarioCsvHeader =
    "t,pi_g,pi_b,pi_u,pi_a_raw,pi_a_clamped,pi_q,maximin,minimax,"
    "saddle_exists";

// 9 significant digits, negative zero printed as 0.
std::string FormatNumber(double value);
std::string FormatCsvRow(const ScenarioRow& row);

struct SolvedGame {
  double t = 0.0;
  bool saturated = false;
  bool quota_included = false;
  PayoffMatrix matrix;
  PureSecurityLevels levels;
  GameSolution solution;
};

SolvedGame SolveRegime(double t_hours, const ScenarioParams& params,
                       double tol);
nlohmann::ordered_json ToJson(const SolvedGame& game);
nlohmann::ordered_json ToJson(const GameSolution& solution,
                              const PayoffMatrix& m);

struct ScenarioReport {
  std::size_t csv_rows_written = 0;
  SolvedGame small_t;  // at t = dt
  SolvedGame large_t;  // at t = t_max
};

nlohmann::ordered_json ToJson(const ScenarioReport& report);

struct RunOptions {
  // Evaluate grid points on worker threads. Rows are still emitted in
  // t order, so the output is identical to a sequential run.
  bool sweep = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

std::vector<ScenarioRow> EvaluateGrid(const ScenarioConfig& config,
                                      const RunOptions& options = {});

// Writes header + rows to `csv` and solves the small-t / large-t games.
ScenarioReport RunScenario(const ScenarioConfig& config, std::ostream& csv,
                           const RunOptions& options = {});

// Same, writing to config.output. Throws IoError if it cannot be written.
ScenarioReport RunScenario(const ScenarioConfig& config,
                           const RunOptions& options = {});

}  // namespace sysgame

#endif  // SYSGAME_SCENARIO_H_
