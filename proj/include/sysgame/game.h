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

#ifndef SYSGAME_GAME_H_
#define SYSGAME_GAME_H_

// Two-person zero-sum matrix games. Rows belong to the maximizing player,
// columns to the minimizing player, and entry (r, c) is the amount paid to
// the row player.

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sysgame {

class PayoffMatrix {
 public:
  // Labels default to r1..rm / c1..cn when empty. Throws
  // std::invalid_argument on an empty matrix, non-finite entries or a label
  // count that does not match the shape.
  explicit PayoffMatrix(Eigen::MatrixXd entries,
                        std::vector<std::string> row_labels = {},
                        std::vector<std::string> col_labels = {});

  static PayoffMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(entries_.cols()); }
  double operator()(std::size_t r, std::size_t c) const {
    return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  const Eigen::MatrixXd& entries() const { return entries_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  PayoffMatrix WithoutColumn(std::size_t col) const;
  PayoffMatrix WithoutRow(std::size_t row) const;
  // a * m + b, labels kept.
  PayoffMatrix Affine(double scale, double shift) const;

 private:
  Eigen::MatrixXd entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Probability weights over one player's pure strategies.
class StrategyMixture {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws std::invalid_argument if any weight is outside [0, 1] or the sum
  // differs from 1 by more than kSumTolerance.
  explicit StrategyMixture(std::vector<double> weights);

  static StrategyMixture Pure(std::size_t size, std::size_t index);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  Eigen::VectorXd AsVector() const;

 private:
  std::vector<double> weights_;
};

struct PureSecurityLevels {
  double maximin = 0.0;
  std::vector<std::size_t> maximin_rows;  // every row attaining maximin
  double minimax = 0.0;
  std::vector<std::size_t> minimax_cols;  // every column attaining minimax

  bool HasSaddle() const { return maximin == minimax; }
};

// Ties are found by exact comparison: the levels are matrix entries, never
// results of arithmetic, so equal cells compare equal.
PureSecurityLevels MaximinMinimax(const PayoffMatrix& m);

// Cells that are both a row minimum and a column maximum. Nonempty exactly
// when maximin == minimax.
std::vector<std::pair<std::size_t, std::size_t>> SaddlePoints(
    const PayoffMatrix& m);

enum class Side { kRow, kCol };

struct DominanceReport {
  // Strategy strictly better than every other one against every opposing
  // pure strategy.
  std::optional<std::size_t> strict_dominant;
  // (dominating, dominated): at least as good everywhere, strictly better
  // somewhere.
  std::vector<std::pair<std::size_t, std::size_t>> weak_pairs;
};

// "Better" means larger for rows and smaller for columns.
DominanceReport Dominance(const PayoffMatrix& m, Side side);

enum class SolveMethod { kPureSaddle, kSupportEnumeration, kFictitiousPlay };

std::string_view ToString(SolveMethod method);

struct GameSolution {
  StrategyMixture row_mix;
  StrategyMixture col_mix;
  double value = 0.0;
  SolveMethod method = SolveMethod::kPureSaddle;
  // max_r (M q)_r - min_c (p^T M)_c, never negative.
  double duality_gap = 0.0;
  std::uint64_t iterations = 0;  // fictitious play only
};

struct SolverOptions {
  double tol = 1e-9;
  std::uint64_t max_iterations = 1'000'000;
  // Games with min(rows, cols) up to this size are solved exactly by
  // support enumeration; larger ones fall back to fictitious play.
  std::size_t enumeration_limit = 6;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, GameSolution best)
      : std::runtime_error(what), best_(std::move(best)) {}
  // Iterate with the smallest duality gap seen.
  const GameSolution& best_iterate() const { return best_; }

 private:
  GameSolution best_;
};

// Optimal strategies for both players. A pure saddle point short-circuits
// everything else. Throws std::invalid_argument for tol <= 0 and
// NonConvergenceError if fictitious play hits max_iterations.
GameSolution SolveMixed(const PayoffMatrix& m, const SolverOptions& options);
inline GameSolution SolveMixed(const PayoffMatrix& m, double tol) {
  SolverOptions options;
  options.tol = tol;
  return SolveMixed(m, options);
}

// Exposed separately so the two mixed-strategy routes can be compared.
std::optional<GameSolution> SolveBySupportEnumeration(const PayoffMatrix& m,
                                                      double tol);
GameSolution SolveByFictitiousPlay(const PayoffMatrix& m,
                                   const SolverOptions& options);

// Expected payoff of each pure row against a column mixture, and of a row
// mixture against each pure column.
Eigen::VectorXd RowPayoffs(const PayoffMatrix& m, const StrategyMixture& col);
Eigen::VectorXd ColPayoffs(const PayoffMatrix& m, const StrategyMixture& row);

double DualityGap(const PayoffMatrix& m, const StrategyMixture& row,
                  const StrategyMixture& col);

}  // namespace sysgame

#endif  // SYSGAME_GAME_H_
