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

#include "sysgame/scenario.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

namespace sysgame {
namespace {

using json = nlohmann::ordered_json;

template <typename T>
T Read(const json& doc, const std::string& key, const char* expected) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(key, "config key \"" + key + "\" must be " + expected);
  }
}

double ReadNumber(const json& doc, const std::string& key) {
  if (!doc.at(key).is_number()) {
    throw ConfigError(key, "config key \"" + key + "\" must be a number");
  }
  return doc.at(key).get<double>();
}

int ReadCount(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(key, "config key \"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

// Turns std::invalid_argument from a validator into a ConfigError naming the
// field whose name appears first in the message.
template <typename F>
void ValidateNamed(F&& check, std::initializer_list<const char*> keys) {
  try {
    check();
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    std::string key;
    for (const char* k : keys) {
      if (msg.find(k) != std::string::npos) {
        key = k;
        break;
      }
    }
    throw ConfigError(key, msg);
  }
}

json LabelList(const std::vector<std::size_t>& idx,
               const std::vector<std::string>& labels) {
  json out = json::array();
  for (auto i : idx) out.push_back(labels[i]);
  return out;
}

json MixtureJson(const StrategyMixture& mix,
                 const std::vector<std::string>& labels) {
  json out = json::object();
  for (std::size_t i = 0; i < mix.size(); ++i) out[labels[i]] = mix[i];
  return out;
}

}  // namespace

ScenarioConfig ParseScenarioConfig(const json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("", "scenario config must be a JSON object");
  }
  ScenarioConfig c;
  ScenarioParams& p = c.params;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n_good") {
      p.n_good = ReadCount(doc, key);
    } else if (key == "n_bad") {
      p.n_bad = ReadCount(doc, key);
    } else if (key == "rate_good") {
      p.rate_good = ReadNumber(doc, key);
    } else if (key == "rate_bad") {
      p.rate_bad = ReadNumber(doc, key);
    } else if (key == "rate_auto") {
      p.rate_auto = ReadNumber(doc, key);
    } else if (key == "user_period_hours") {
      p.user_period_hours = ReadNumber(doc, key);
    } else if (key == "auto_period_hours") {
      p.auto_period_hours = ReadNumber(doc, key);
    } else if (key == "threshold_hours") {
      p.threshold_hours = ReadNumber(doc, key);
    } else if (key == "auto_phase_rad") {
      p.auto_phase_rad = ReadNumber(doc, key);
    } else if (key == "clamp_auto") {
      if (!value.is_boolean()) {
        throw ConfigError(key, "config key \"clamp_auto\" must be a boolean");
      }
      p.clamp_auto = value.get<bool>();
    } else if (key == "t_max_hours") {
      c.t_max_hours = ReadNumber(doc, key);
    } else if (key == "dt_hours") {
      c.dt_hours = ReadNumber(doc, key);
    } else if (key == "tol") {
      c.tol = ReadNumber(doc, key);
    } else if (key == "seed") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw ConfigError(key,
                          "config key \"seed\" must be an unsigned integer");
      }
      c.seed = value.get<std::uint64_t>();
    } else if (key == "output") {
      c.output = Read<std::string>(doc, key, "a string");
    } else {
      throw ConfigError(key, "unknown config key \"" + key + "\"");
    }
  }
  Validate(c);
  return c;
}

ScenarioConfig LoadScenarioConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(
        "", "config file " + path + " is not valid JSON: " + e.what());
  }
  return ParseScenarioConfig(doc);
}

void Validate(const ScenarioConfig& config) {
  const ScenarioParams& p = config.params;
  if (p.n_good < 0) throw ConfigError("n_good", "n_good must be >= 0");
  if (p.n_bad < 0) throw ConfigError("n_bad", "n_bad must be >= 0");
  if (p.n_good + p.n_bad < 1) {
    throw ConfigError("n_good", "n_good + n_bad must be >= 1");
  }
  ValidateNamed([&] { Validate(p); },
                {"rate_good", "rate_bad", "rate_auto", "user_period_hours",
                 "auto_period_hours", "threshold_hours", "auto_phase_rad"});
  if (!std::isfinite(config.t_max_hours) || config.t_max_hours <= 0.0) {
    throw ConfigError("t_max_hours", "t_max_hours must be finite and > 0");
  }
  if (!std::isfinite(config.dt_hours) || config.dt_hours <= 0.0) {
    throw ConfigError("dt_hours", "dt_hours must be finite and > 0");
  }
  if (config.dt_hours > config.t_max_hours) {
    throw ConfigError("dt_hours", "dt_hours must not exceed t_max_hours");
  }
  if (!std::isfinite(config.tol) || config.tol <= 0.0) {
    throw ConfigError("tol", "tol must be finite and > 0");
  }
}

std::vector<double> TimeGrid(const ScenarioConfig& config) {
  Validate(config);
  // The slack keeps t_max on the grid when it is a multiple of dt up to
  // rounding.
  const auto steps = static_cast<std::size_t>(
      std::floor(config.t_max_hours / config.dt_hours + 1e-9));
  std::vector<double> grid(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    grid[k] = static_cast<double>(k) * config.dt_hours;
  }
  return grid;
}

ScenarioRow EvaluateRow(double t_hours, const ScenarioParams& params) {
  const RegimeGame game = RegimeMatrix(t_hours, params);
  const PureSecurityLevels levels = MaximinMinimax(game.matrix);
  return ScenarioRow{t_hours, Breakdown(t_hours, params), levels.maximin,
                     levels.minimax, levels.HasSaddle()};
}

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value + 0.0);
  return buf;
}

std::string FormatCsvRow(const ScenarioRow& row) {
  const PayoffBreakdown& b = row.payoffs;
  std::string line;
  for (double v : {row.t, b.pi_g, b.pi_b, b.pi_u, b.pi_a_raw, b.pi_a_clamped,
                   b.pi_q, row.maximin, row.minimax}) {
    line += FormatNumber(v);
    line += ',';
  }
  line += row.saddle_exists ? '1' : '0';
  return line;
}

SolvedGame SolveRegime(double t_hours, const ScenarioParams& params,
                       double tol) {
  RegimeGame game = RegimeMatrix(t_hours, params);
  PureSecurityLevels levels = MaximinMinimax(game.matrix);
  GameSolution solution = SolveMixed(game.matrix, tol);
  return SolvedGame{t_hours,
                    game.saturated,
                    game.quota_included,
                    std::move(game.matrix),
                    std::move(levels),
                    std::move(solution)};
}

json ToJson(const GameSolution& solution, const PayoffMatrix& m) {
  return json{{"method", std::string(ToString(solution.method))},
              {"value", solution.value},
              {"duality_gap", solution.duality_gap},
              {"iterations", solution.iterations},
              {"row_mix", MixtureJson(solution.row_mix, m.row_labels())},
              {"col_mix", MixtureJson(solution.col_mix, m.col_labels())}};
}

json ToJson(const SolvedGame& game) {
  const auto& rows = game.matrix.row_labels();
  const auto& cols = game.matrix.col_labels();
  json saddles = json::array();
  for (auto [r, c] : SaddlePoints(game.matrix)) {
    saddles.push_back(json::array({rows[r], cols[c]}));
  }
  const auto& tie = game.levels.maximin_rows;
  const bool conceal_optimal =
      std::find(tie.begin(), tie.end(), kConcealFilesRow) != tie.end();
  return json{{"t", game.t},
              {"saturated", game.saturated},
              {"quota_included", game.quota_included},
              {"maximin", game.levels.maximin},
              {"maximin_rows", LabelList(game.levels.maximin_rows, rows)},
              {"minimax", game.levels.minimax},
              {"minimax_cols", LabelList(game.levels.minimax_cols, cols)},
              {"saddle_points", saddles},
              {"conceal_files_optimal", conceal_optimal},
              {"solution", ToJson(game.solution, game.matrix)}};
}

json ToJson(const ScenarioReport& report) {
  return json{{"csv_rows_written", report.csv_rows_written},
              {"small_t", ToJson(report.small_t)},
              {"large_t", ToJson(report.large_t)}};
}

std::vector<ScenarioRow> EvaluateGrid(const ScenarioConfig& config,
                                      const RunOptions& options) {
  const std::vector<double> grid = TimeGrid(config);
  std::vector<ScenarioRow> rows(grid.size());
  unsigned workers = 1;
  if (options.sweep) {
    workers = options.threads
                  ? options.threads
                  : std::max(1u, std::thread::hardware_concurrency());
    workers =
        static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
  }
  if (workers <= 1) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      rows[k] = EvaluateRow(grid[k], config.params);
    }
    return rows;
  }
  // Strided partition; each worker writes only its own slots.
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < grid.size(); k += workers) {
            rows[k] = EvaluateRow(grid[k], config.params);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

ScenarioReport RunScenario(const ScenarioConfig& config, std::ostream& csv,
                           const RunOptions& options) {
  const std::vector<ScenarioRow> rows = EvaluateGrid(config, options);
  csv << kScenarioCsvHeader << '\n';
  for (const auto& row : rows) csv << FormatCsvRow(row) << '\n';
  if (!csv) throw IoError("failed writing scenario CSV");
  return ScenarioReport{
      rows.size(), SolveRegime(config.dt_hours, config.params, config.tol),
      SolveRegime(config.t_max_hours, config.params, config.tol)};
}

ScenarioReport RunScenario(const ScenarioConfig& config,
                           const RunOptions& options) {
  if (config.output.empty()) {
    throw ConfigError("output", "no output path given");
  }
  Validate(config);
  std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file " + config.output);
  ScenarioReport report = RunScenario(config, out, options);
  out.close();
  if (!out) throw IoError("failed writing output file " + config.output);
  return report;
}

}  // namespace sysgame
