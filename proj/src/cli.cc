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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sysgame/payoff.h"
#include "sysgame/scenario.h"

namespace sysgame {
namespace {

using json = nlohmann::ordered_json;

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(Trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::optional<double> ParseDouble(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ReadJsonFile(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", path + " is not valid JSON: " + e.what());
  }
}

double Number(const json& obj, const std::string& key) {
  if (!obj.at(key).is_number()) {
    throw ConfigError(key, "config key \"" + key + "\" must be a number");
  }
  return obj.at(key).get<double>();
}

// Output stream that is either stdout (`fallback`) or a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void Finish() {
    stream_->flush();
    if (!*stream_) throw IoError("failed writing output");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void PrintError(std::ostream& err, const std::string& type,
                const std::string& message, const json& extra = {}) {
  json body{{"type", type}, {"message", message}};
  if (extra.is_object()) body.update(extra);
  err << json{{"error", body}}.dump() << '\n';
}

// --- subcommands -----------------------------------------------------------

struct ScenarioArgs {
  std::string config;
  std::string out;
  std::optional<double> tol;
  bool sweep = false;
  unsigned threads = 0;
};

int RunScenarioCommand(const ScenarioArgs& args, std::ostream& out) {
  ScenarioConfig config = LoadScenarioConfig(args.config);
  if (!args.out.empty()) config.output = args.out;
  if (args.tol) {
    config.tol = *args.tol;
    Validate(config);
  }
  const ScenarioReport report =
      RunScenario(config, RunOptions{args.sweep, args.threads});
  out << ToJson(report).dump(2) << '\n';
  return kExitOk;
}

struct PayoffArgs {
  std::string config;
  double t = 0.0;
  bool as_json = false;
};

int RunPayoffCommand(const PayoffArgs& args, std::ostream& out) {
  const ScenarioParams params = args.config.empty()
                                    ? ScenarioParams{}
                                    : LoadScenarioConfig(args.config).params;
  const TidyingGame game = CharacteristicMatrix(args.t, params);
  const PayoffBreakdown& b = game.payoffs;
  const PayoffMatrix& m = game.matrix;
  if (args.as_json) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      entries.push_back(row);
    }
    out << json{{"t", args.t},
                {"theta", game.theta},
                {"saturated", game.saturated},
                {"pi_g", b.pi_g},
                {"pi_b", b.pi_b},
                {"pi_u", b.pi_u},
                {"pi_a_raw", b.pi_a_raw},
                {"pi_a", b.pi_a},
                {"pi_q", b.pi_q},
                {"row_labels", m.row_labels()},
                {"col_labels", m.col_labels()},
                {"matrix", entries}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "t = " << FormatNumber(args.t) << " h, theta = " << game.theta
      << (game.saturated ? "  [saturated: pi_u > 1/2]" : "") << '\n';
  out << "pi_g = " << FormatNumber(b.pi_g)
      << "  pi_b = " << FormatNumber(b.pi_b)
      << "  pi_u = " << FormatNumber(b.pi_u)
      << "  pi_a = " << FormatNumber(b.pi_a) << " (raw "
      << FormatNumber(b.pi_a_raw) << ")  pi_q = " << FormatNumber(b.pi_q)
      << "\n\n";
  constexpr int kLabelWidth = 18;
  constexpr int kCellWidth = 22;
  out << std::left << std::setw(kLabelWidth) << "users \\ system";
  for (const auto& label : m.col_labels())
    out << std::setw(kCellWidth) << label;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << std::setw(kLabelWidth) << m.row_labels()[r];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << std::setw(kCellWidth) << FormatNumber(m(r, c));
    }
    out << '\n';
  }
  return kExitOk;
}

int RunSolveCommand(const std::string& path, double tol, std::ostream& out) {
  const PayoffMatrix m = LoadMatrix(path);
  const PureSecurityLevels levels = MaximinMinimax(m);
  json saddles = json::array();
  for (auto [r, c] : SaddlePoints(m)) {
    saddles.push_back(json::array({m.row_labels()[r], m.col_labels()[c]}));
  }
  auto dominance_json = [&](Side side) {
    const auto& labels = side == Side::kRow ? m.row_labels() : m.col_labels();
    const DominanceReport d = Dominance(m, side);
    json pairs = json::array();
    for (auto [a, b] : d.weak_pairs) {
      pairs.push_back(json::array({labels[a], labels[b]}));
    }
    return json{{"strict_dominant",
                 d.strict_dominant ? json(labels[*d.strict_dominant]) : json()},
                {"weak_pairs", pairs}};
  };
  json maximin_rows = json::array(), minimax_cols = json::array();
  for (auto r : levels.maximin_rows) maximin_rows.push_back(m.row_labels()[r]);
  for (auto c : levels.minimax_cols) minimax_cols.push_back(m.col_labels()[c]);

  json report{{"maximin", levels.maximin},
              {"maximin_rows", maximin_rows},
              {"minimax", levels.minimax},
              {"minimax_cols", minimax_cols},
              {"saddle_points", saddles},
              {"row_dominance", dominance_json(Side::kRow)},
              {"col_dominance", dominance_json(Side::kCol)},
              {"solution", ToJson(SolveMixed(m, tol), m)}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

std::string RationalString(const BigRational& q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

int RunEntropyCommand(const std::string& text, std::optional<std::size_t> axis,
                      std::ostream& out) {
  const DeviationVector d = ParseDeviationVector(text);
  std::vector<std::size_t> axes;
  if (axis) {
    if (*axis < 1 || *axis > d.dims()) {
      throw std::out_of_range("--axis must lie in [1, " +
                              std::to_string(d.dims()) + "]");
    }
    axes.push_back(*axis - 1);
  } else {
    for (std::size_t i = 0; i < d.dims(); ++i) axes.push_back(i);
  }
  json gradients = json::array();
  for (auto i : axes) {
    const BigRational rel = RelativeGradient(d, i);
    gradients.push_back(
        {{"axis", i + 1},
         {"path_gradient", PathGradient(d, i).str()},
         {"relative_gradient", RationalString(rel)},
         {"relative_gradient_value", static_cast<double>(rel)}});
  }
  out << json{{"d", d.components()},
              {"path_count", PathCount(d).str()},
              {"log_path_count", LogPathCount(d)},
              {"euclidean_norm", EuclideanNorm(d)},
              {"gradients", gradients}}
             .dump(2)
      << '\n';
  return kExitOk;
}

struct WalkArgs {
  std::size_t dims = 2;
  std::uint64_t steps = 100;
  double drift_up_prob = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

int RunWalkCommand(const WalkArgs& args, std::ostream& out) {
  const WalkTrajectory walk =
      RandomWalk(args.dims, args.steps, args.drift_up_prob, args.seed);
  Sink sink(args.out, out);
  std::ostream& csv = sink.get();
  csv << "step";
  for (std::size_t i = 1; i <= args.dims; ++i) csv << ",d" << i;
  csv << '\n';
  for (std::size_t s = 0; s < walk.states.size(); ++s) {
    csv << s;
    for (auto v : walk.states[s].components()) csv << ',' << v;
    csv << '\n';
  }
  sink.Finish();
  return kExitOk;
}

struct DuelArgs {
  std::string config;
  std::optional<double> t;
  std::optional<double> auto_period, auto_exec, auto_decision;
  std::optional<std::uint32_t> auto_iterations;
  std::optional<double> human_decision, human_exec, human_wait_base, human_wait;
};

int RunDuelCommand(const DuelArgs& args, std::ostream& out) {
  DuelConfig cfg = args.config.empty()
                       ? DuelConfig{}
                       : ParseDuelConfig(ReadJsonFile(args.config));
  if (args.auto_period) cfg.automatic.period_hours = *args.auto_period;
  if (args.auto_exec) cfg.automatic.exec_hours = *args.auto_exec;
  if (args.auto_decision) cfg.automatic.decision_hours = *args.auto_decision;
  if (args.auto_iterations) cfg.automatic.iterations = *args.auto_iterations;
  if (args.human_decision) cfg.human.decision_hours = *args.human_decision;
  if (args.human_exec) cfg.human.exec_hours = *args.human_exec;
  if (args.human_wait_base) cfg.human.wait_base_hours = *args.human_wait_base;
  if (args.human_wait) cfg.human.wait_override_hours = *args.human_wait;
  Validate(cfg.automatic);
  Validate(cfg.human);

  std::vector<double> times;
  if (args.t) {
    times.push_back(*args.t);
  } else {
    for (int h = 0; h < 24; ++h) times.push_back(h);
  }
  const ResponseBounds bounds = AutoResponseBounds(cfg.automatic);
  json duels = json::array();
  bool auto_wins_all = true;
  for (double t : times) {
    const DuelOutcome d = Duel(cfg.automatic, cfg.human, t);
    auto_wins_all = auto_wins_all && d.winner == DuelWinner::kAuto;
    duels.push_back({{"t", t},
                     {"winner", std::string(ToString(d.winner))},
                     {"auto_worst_hours", d.auto_worst_hours},
                     {"human_best_hours", d.human_best_hours},
                     {"human_wait_hours", HumanWait(t, cfg.human)}});
  }
  out << json{{"auto_bounds",
               {{"lower_hours", bounds.lower_hours},
                {"upper_hours", bounds.upper_hours}}},
              {"duels", duels},
              {"auto_wins_all", auto_wins_all}}
             .dump(2)
      << '\n';
  return kExitOk;
}

struct DistributionArgs {
  std::string config;
  std::string out;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double lambda_min = -5.0;
  double lambda_max = 5.0;
  std::size_t points = 101;
};

int RunDistributionCommand(const DistributionArgs& args, std::ostream& out) {
  const DistributionParams params =
      args.config.empty() ? DistributionParams{}
                          : ParseDistributionConfig(ReadJsonFile(args.config));
  Validate(params);
  std::vector<std::string> lines;
  if (args.samples > 0) {
    const auto draws = SampleDistribution(params, args.samples, args.seed);
    lines.reserve(draws.size() + 1);
    lines.emplace_back("sample");
    for (double x : draws) lines.push_back(FormatNumber(x));
  } else {
    if (args.points < 2 || !(args.lambda_max > args.lambda_min)) {
      throw std::invalid_argument(
          "need --points >= 2 and --lambda-max > --lambda-min");
    }
    lines.emplace_back("lambda,density");
    const double step = (args.lambda_max - args.lambda_min) /
                        static_cast<double>(args.points - 1);
    for (std::size_t i = 0; i < args.points; ++i) {
      const double x = args.lambda_min + static_cast<double>(i) * step;
      lines.push_back(FormatNumber(x) + "," +
                      FormatNumber(PlanckGaussianDensity(x, params)));
    }
  }
  Sink sink(args.out, out);
  for (const auto& line : lines) sink.get() << line << '\n';
  sink.Finish();
  return kExitOk;
}

}  // namespace

PayoffMatrix ParseMatrix(const std::string& text) {
  const std::string body = Trim(text);
  if (body.empty()) throw std::invalid_argument("empty matrix input");
  if (body.front() == '[') {
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("bad JSON matrix: ") + e.what());
    }
    std::vector<std::vector<double>> rows;
    for (const auto& row : doc) {
      if (!row.is_array()) {
        throw std::invalid_argument("JSON matrix must be a 2-D array");
      }
      std::vector<double> values;
      for (const auto& v : row) {
        if (!v.is_number()) {
          throw std::invalid_argument("JSON matrix entries must be numbers");
        }
        values.push_back(v.get<double>());
      }
      rows.push_back(std::move(values));
    }
    return PayoffMatrix::FromRows(rows);
  }

  std::istringstream in(body);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header = SplitCsvLine(Trim(line));
  std::vector<std::string> row_labels;
  std::vector<std::vector<double>> rows;
  bool labelled = false;
  while (std::getline(in, line)) {
    line = Trim(line);
    if (line.empty()) continue;
    auto cells = SplitCsvLine(line);
    if (rows.empty()) labelled = !cells.empty() && !ParseDouble(cells[0]);
    if (labelled) {
      row_labels.push_back(cells.front());
      cells.erase(cells.begin());
    }
    std::vector<double> values;
    for (const auto& cell : cells) {
      auto v = ParseDouble(cell);
      if (!v) {
        throw std::invalid_argument("non-numeric matrix cell \"" + cell +
                                    "\" in row " +
                                    std::to_string(rows.size() + 1));
      }
      values.push_back(*v);
    }
    rows.push_back(std::move(values));
  }
  if (labelled && !header.empty()) header.erase(header.begin());
  PayoffMatrix m = PayoffMatrix::FromRows(rows);
  if (header.size() != m.cols()) {
    throw std::invalid_argument("CSV header has " +
                                std::to_string(header.size()) + " labels for " +
                                std::to_string(m.cols()) + " columns");
  }
  return PayoffMatrix(m.entries(), std::move(row_labels), std::move(header));
}

PayoffMatrix LoadMatrix(const std::string& path) {
  return ParseMatrix(ReadFile(path));
}

DeviationVector ParseDeviationVector(const std::string& text) {
  std::vector<std::uint64_t> comps;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    cell = Trim(cell);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
      throw std::invalid_argument(
          "deviation components must be nonnegative "
          "integers, got \"" +
          cell + "\"");
    }
    comps.push_back(v);
  }
  return DeviationVector(std::move(comps));
}

DuelConfig ParseDuelConfig(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "duel config must be an object");
  DuelConfig cfg;
  for (const auto& [section, body] : doc.items()) {
    if (!body.is_object()) {
      throw ConfigError(section, "\"" + section + "\" must be an object");
    }
    if (section == "auto") {
      for (const auto& [key, value] : body.items()) {
        if (key == "period_hours") {
          cfg.automatic.period_hours = Number(body, key);
        } else if (key == "exec_hours") {
          cfg.automatic.exec_hours = Number(body, key);
        } else if (key == "decision_hours") {
          cfg.automatic.decision_hours = Number(body, key);
        } else if (key == "iterations") {
          if (!value.is_number_unsigned()) {
            throw ConfigError(key,
                              "\"iterations\" must be an unsigned integer");
          }
          cfg.automatic.iterations = value.get<std::uint32_t>();
        } else {
          throw ConfigError(key, "unknown config key \"" + key + "\"");
        }
      }
    } else if (section == "human") {
      for (const auto& [key, value] : body.items()) {
        if (key == "decision_hours") {
          cfg.human.decision_hours = Number(body, key);
        } else if (key == "exec_hours") {
          cfg.human.exec_hours = Number(body, key);
        } else if (key == "wait_base_hours") {
          cfg.human.wait_base_hours = Number(body, key);
        } else if (key == "wait_override_hours") {
          cfg.human.wait_override_hours = Number(body, key);
        } else {
          throw ConfigError(key, "unknown config key \"" + key + "\"");
        }
      }
    } else {
      throw ConfigError(section, "unknown config key \"" + section + "\"");
    }
  }
  return cfg;
}

DistributionParams ParseDistributionConfig(const json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("", "distribution config must be an object");
  }
  DistributionParams p;
  for (const auto& [key, value] : doc.items()) {
    if (key == "gauss_amp") {
      p.gauss_amp = Number(doc, key);
    } else if (key == "gauss_mean") {
      p.gauss_mean = Number(doc, key);
    } else if (key == "gauss_sigma") {
      p.gauss_sigma = Number(doc, key);
    } else if (key == "planck_amp") {
      p.planck_amp = Number(doc, key);
    } else if (key == "planck_origin") {
      p.planck_origin = Number(doc, key);
    } else if (key == "planck_temp") {
      p.planck_temp = Number(doc, key);
    } else {
      throw ConfigError(key, "unknown config key \"" + key + "\"");
    }
  }
  return p;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Quantitative models of system administration as a game",
               "sysgame"};
  app.require_subcommand(1);

  ScenarioArgs scenario;
  auto* scenario_cmd =
      app.add_subcommand("scenario", "Payoff time series and solved games");
  scenario_cmd->add_option("--config", scenario.config, "JSON config")
      ->required();
  scenario_cmd->add_option("--out", scenario.out,
                           "CSV path (overrides config)");
  scenario_cmd->add_option("--tol", scenario.tol, "solver tolerance");
  scenario_cmd->add_flag("--sweep", scenario.sweep,
                         "evaluate grid points concurrently");
  scenario_cmd->add_option("--threads", scenario.threads,
                           "worker threads for --sweep (0 = all cores)");

  PayoffArgs payoff;
  auto* payoff_cmd =
      app.add_subcommand("payoff", "Characteristic matrix at one time");
  payoff_cmd->add_option("--config", payoff.config, "JSON scenario config");
  payoff_cmd->add_option("--t", payoff.t, "time in hours")->required();
  payoff_cmd->add_flag("--json", payoff.as_json, "emit JSON");

  std::string matrix_path;
  double solve_tol = 1e-9;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a zero-sum matrix game");
  solve_cmd->add_option("matrix", matrix_path, "JSON or CSV matrix file")
      ->required();
  solve_cmd->add_option("--tol", solve_tol, "solver tolerance");

  std::string deviation;
  std::optional<std::size_t> axis;
  auto* entropy_cmd =
      app.add_subcommand("entropy", "Path count and gradient of a deviation");
  entropy_cmd->add_option("--d", deviation, "components, e.g. 3,2")->required();
  entropy_cmd->add_option("--axis", axis, "1-based axis (default: all)");

  WalkArgs walk;
  auto* walk_cmd = app.add_subcommand("walk", "Random walk on the lattice");
  walk_cmd->add_option("--dims", walk.dims, "lattice dimension");
  walk_cmd->add_option("--steps", walk.steps, "number of steps");
  walk_cmd->add_option("--p", walk.drift_up_prob, "probability of a +1 move");
  walk_cmd->add_option("--seed", walk.seed, "RNG seed");
  walk_cmd->add_option("--out", walk.out, "CSV path (default stdout)");

  DuelArgs duel;
  auto* duel_cmd =
      app.add_subcommand("duel", "Automatic vs human response race");
  duel_cmd->add_option("--config", duel.config, "JSON agents config");
  duel_cmd->add_option("--t", duel.t, "incident hour (default: 0..23)");
  duel_cmd->add_option("--auto-period", duel.auto_period, "T_p in hours");
  duel_cmd->add_option("--auto-exec", duel.auto_exec, "T_e(A) in hours");
  duel_cmd->add_option("--auto-decision", duel.auto_decision,
                       "T_d(A) in hours");
  duel_cmd->add_option("--auto-iterations", duel.auto_iterations, "runs n");
  duel_cmd->add_option("--human-decision", duel.human_decision, "T_d(H)");
  duel_cmd->add_option("--human-exec", duel.human_exec, "T_e(H)");
  duel_cmd->add_option("--human-wait-base", duel.human_wait_base,
                       "diurnal wait amplitude");
  duel_cmd->add_option("--human-wait", duel.human_wait, "fixed wait T_w(H)");

  DistributionArgs dist;
  auto* dist_cmd = app.add_subcommand(
      "distribution", "Planck-Gaussian density table or samples");
  dist_cmd->add_option("--config", dist.config, "JSON distribution params");
  dist_cmd->add_option("--out", dist.out, "CSV path (default stdout)");
  dist_cmd->add_option("--samples", dist.samples, "draw this many samples");
  dist_cmd->add_option("--seed", dist.seed, "RNG seed");
  dist_cmd->add_option("--lambda-min", dist.lambda_min, "table start");
  dist_cmd->add_option("--lambda-max", dist.lambda_max, "table end");
  dist_cmd->add_option("--points", dist.points, "table size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    PrintError(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (*scenario_cmd) return RunScenarioCommand(scenario, out);
    if (*payoff_cmd) return RunPayoffCommand(payoff, out);
    if (*solve_cmd) return RunSolveCommand(matrix_path, solve_tol, out);
    if (*entropy_cmd) return RunEntropyCommand(deviation, axis, out);
    if (*walk_cmd) return RunWalkCommand(walk, out);
    if (*duel_cmd) return RunDuelCommand(duel, out);
    if (*dist_cmd) return RunDistributionCommand(dist, out);
  } catch (const ConfigError& e) {
    PrintError(err, "config", e.what(), json{{"key", e.key()}});
    return kExitUsage;
  } catch (const IoError& e) {
    PrintError(err, "io", e.what());
    return kExitIo;
  } catch (const NonConvergenceError& e) {
    const auto& best = e.best_iterate();
    PrintError(err, "nonconvergence", e.what(),
               json{{"best_value", best.value},
                    {"best_duality_gap", best.duality_gap},
                    {"row_mix", best.row_mix.weights()},
                    {"col_mix", best.col_mix.weights()}});
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    PrintError(err, "invalid_argument", e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    PrintError(err, "invalid_argument", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    PrintError(err, "error", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sysgame
