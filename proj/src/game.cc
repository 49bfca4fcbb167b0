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

#include "sysgame/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sysgame {
namespace {

std::vector<std::string> DefaultLabels(char prefix, Eigen::Index n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i + 1));
  }
  return labels;
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool NextCombination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> FirstCombination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

// Solves  sum_i w_i A(i, j) = v  for j in `across`, sum_i w_i = 1, with w
// supported on `support`. `a` is indexed (support, across) already.
std::optional<std::pair<Eigen::VectorXd, double>> SolveIndifference(
    const Eigen::MatrixXd& a) {
  const Eigen::Index k = a.rows();
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(k + 1, k + 1);
  system.topLeftCorner(k, k) = a.transpose();
  system.topRightCorner(k, 1).setConstant(-1.0);
  system.bottomLeftCorner(1, k).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible()) return std::nullopt;
  Eigen::VectorXd sol = lu.solve(rhs);
  return std::make_pair(Eigen::VectorXd(sol.head(k)), sol(k));
}

std::vector<double> Spread(const Eigen::VectorXd& local,
                           const std::vector<std::size_t>& support,
                           std::size_t size) {
  std::vector<double> full(size, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double w = std::max(0.0, local(static_cast<Eigen::Index>(i)));
    full[support[i]] = w;
    total += w;
  }
  for (auto& w : full) w /= total;
  return full;
}

Eigen::MatrixXd Submatrix(const Eigen::MatrixXd& m,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  Eigen::MatrixXd sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(static_cast<Eigen::Index>(rows[i]),
            static_cast<Eigen::Index>(cols[j]));
    }
  }
  return sub;
}

std::vector<double> Normalized(const Eigen::VectorXd& counts) {
  const double total = counts.sum();
  std::vector<double> w(static_cast<std::size_t>(counts.size()));
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    w[static_cast<std::size_t>(i)] = counts(i) / total;
  }
  return w;
}

}  // namespace

PayoffMatrix::PayoffMatrix(Eigen::MatrixXd entries,
                           std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels)
    : entries_(std::move(entries)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw std::invalid_argument(
        "payoff matrix needs at least 1 row and column");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("payoff matrix entries must be finite");
  }
  if (row_labels_.empty()) row_labels_ = DefaultLabels('r', entries_.rows());
  if (col_labels_.empty()) col_labels_ = DefaultLabels('c', entries_.cols());
  if (row_labels_.size() != rows() || col_labels_.size() != cols()) {
    throw std::invalid_argument("label count does not match matrix shape");
  }
}

PayoffMatrix PayoffMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument(
        "payoff matrix needs at least 1 row and column");
  }
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      throw std::invalid_argument("ragged payoff matrix: row " +
                                  std::to_string(r + 1));
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
    }
  }
  return PayoffMatrix(std::move(m));
}

PayoffMatrix PayoffMatrix::WithoutColumn(std::size_t col) const {
  if (col >= cols() || cols() == 1) {
    throw std::out_of_range("cannot remove column " + std::to_string(col));
  }
  std::vector<std::size_t> rows_kept(rows()), cols_kept;
  std::iota(rows_kept.begin(), rows_kept.end(), std::size_t{0});
  auto labels = col_labels_;
  for (std::size_t c = 0; c < cols(); ++c) {
    if (c != col) cols_kept.push_back(c);
  }
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(col));
  return PayoffMatrix(Submatrix(entries_, rows_kept, cols_kept), row_labels_,
                      std::move(labels));
}

PayoffMatrix PayoffMatrix::WithoutRow(std::size_t row) const {
  if (row >= rows() || rows() == 1) {
    throw std::out_of_range("cannot remove row " + std::to_string(row));
  }
  std::vector<std::size_t> rows_kept, cols_kept(cols());
  std::iota(cols_kept.begin(), cols_kept.end(), std::size_t{0});
  auto labels = row_labels_;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r != row) rows_kept.push_back(r);
  }
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(row));
  return PayoffMatrix(Submatrix(entries_, rows_kept, cols_kept),
                      std::move(labels), col_labels_);
}

PayoffMatrix PayoffMatrix::Affine(double scale, double shift) const {
  Eigen::MatrixXd m = (entries_.array() * scale + shift).matrix();
  return PayoffMatrix(std::move(m), row_labels_, col_labels_);
}

StrategyMixture::StrategyMixture(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("strategy mixture must not be empty");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0 + kSumTolerance)) {
      throw std::invalid_argument("mixture weight outside [0, 1]");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("mixture weights must sum to 1");
  }
}

StrategyMixture StrategyMixture::Pure(std::size_t size, std::size_t index) {
  std::vector<double> w(size, 0.0);
  w.at(index) = 1.0;
  return StrategyMixture(std::move(w));
}

Eigen::VectorXd StrategyMixture::AsVector() const {
  return Eigen::Map<const Eigen::VectorXd>(
      weights_.data(), static_cast<Eigen::Index>(weights_.size()));
}

PureSecurityLevels MaximinMinimax(const PayoffMatrix& m) {
  const Eigen::MatrixXd& a = m.entries();
  const Eigen::VectorXd row_min = a.rowwise().minCoeff();
  const Eigen::RowVectorXd col_max = a.colwise().maxCoeff();

  PureSecurityLevels out;
  out.maximin = row_min.maxCoeff();
  out.minimax = col_max.minCoeff();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row_min(static_cast<Eigen::Index>(r)) == out.maximin) {
      out.maximin_rows.push_back(r);
    }
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (col_max(static_cast<Eigen::Index>(c)) == out.minimax) {
      out.minimax_cols.push_back(c);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SaddlePoints(
    const PayoffMatrix& m) {
  const Eigen::MatrixXd& a = m.entries();
  const Eigen::VectorXd row_min = a.rowwise().minCoeff();
  const Eigen::RowVectorXd col_max = a.colwise().maxCoeff();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a(r, c) == row_min(r) && a(r, c) == col_max(c)) {
        cells.emplace_back(static_cast<std::size_t>(r),
                           static_cast<std::size_t>(c));
      }
    }
  }
  return cells;
}

DominanceReport Dominance(const PayoffMatrix& m, Side side) {
  // Work on the row player's view; columns are negated so that larger is
  // always better.
  const Eigen::MatrixXd a = side == Side::kRow
                                ? m.entries()
                                : Eigen::MatrixXd(-m.entries().transpose());
  const Eigen::Index n = a.rows();

  DominanceReport report;
  for (Eigen::Index i = 0; i < n; ++i) {
    bool strictly_beats_all = true;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const Eigen::ArrayXd diff = (a.row(i) - a.row(j)).transpose().array();
      if (!(diff > 0.0).all()) strictly_beats_all = false;
      if ((diff >= 0.0).all() && (diff > 0.0).any()) {
        report.weak_pairs.emplace_back(static_cast<std::size_t>(i),
                                       static_cast<std::size_t>(j));
      }
    }
    if (strictly_beats_all && !report.strict_dominant) {
      report.strict_dominant = static_cast<std::size_t>(i);
    }
  }
  return report;
}

std::string_view ToString(SolveMethod method) {
  switch (method) {
    case SolveMethod::kPureSaddle:
      return "pure_saddle";
    case SolveMethod::kSupportEnumeration:
      return "support_enumeration";
    case SolveMethod::kFictitiousPlay:
      return "fictitious_play";
  }
  return "unknown";
}

Eigen::VectorXd RowPayoffs(const PayoffMatrix& m, const StrategyMixture& col) {
  if (col.size() != m.cols()) {
    throw std::invalid_argument("column mixture size does not match matrix");
  }
  return m.entries() * col.AsVector();
}

Eigen::VectorXd ColPayoffs(const PayoffMatrix& m, const StrategyMixture& row) {
  if (row.size() != m.rows()) {
    throw std::invalid_argument("row mixture size does not match matrix");
  }
  return m.entries().transpose() * row.AsVector();
}

double DualityGap(const PayoffMatrix& m, const StrategyMixture& row,
                  const StrategyMixture& col) {
  const double upper = RowPayoffs(m, col).maxCoeff();
  const double lower = ColPayoffs(m, row).minCoeff();
  return std::max(0.0, upper - lower);
}

std::optional<GameSolution> SolveBySupportEnumeration(const PayoffMatrix& m,
                                                      double tol) {
  // Shapley-Snow: once every entry is >= 1 (so the value is positive) some
  // optimal pair is supported on a square submatrix whose bordered
  // indifference system is nonsingular, so equal-size supports suffice.
  const double shift = 1.0 - m.entries().minCoeff();
  const Eigen::MatrixXd a = (m.entries().array() + shift).matrix();
  const double eps = 1e-9 * (1.0 + a.cwiseAbs().maxCoeff());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    for (auto row_set = FirstCombination(k);;) {
      for (auto col_set = FirstCombination(k);;) {
        const Eigen::MatrixXd sub = Submatrix(a, row_set, col_set);
        auto row_side = SolveIndifference(sub);
        if (row_side && (row_side->first.array() >= -eps).all()) {
          const double v = row_side->second;
          const StrategyMixture p(Spread(row_side->first, row_set, rows));
          const Eigen::VectorXd col_pay = a.transpose() * p.AsVector();
          auto col_side = (col_pay.array() >= v - eps).all()
                              ? SolveIndifference(sub.transpose())
                              : std::nullopt;
          if (col_side && (col_side->first.array() >= -eps).all()) {
            const StrategyMixture q(Spread(col_side->first, col_set, cols));
            const Eigen::VectorXd row_pay = a * q.AsVector();
            if ((row_pay.array() <= v + eps).all()) {
              const double gap = DualityGap(m, p, q);
              if (gap <= tol) {
                return GameSolution{
                    p, q, v - shift, SolveMethod::kSupportEnumeration, gap, 0};
              }
            }
          }
        }
        if (!NextCombination(col_set, cols)) break;
      }
      if (!NextCombination(row_set, rows)) break;
    }
  }
  return std::nullopt;
}

GameSolution SolveByFictitiousPlay(const PayoffMatrix& m,
                                   const SolverOptions& options) {
  const Eigen::MatrixXd& a = m.entries();
  const PureSecurityLevels pure = MaximinMinimax(m);

  Eigen::VectorXd row_counts = Eigen::VectorXd::Zero(a.rows());
  Eigen::VectorXd col_counts = Eigen::VectorXd::Zero(a.cols());
  // Cumulative payoff of each pure row against the column history, and of
  // the row history against each pure column.
  Eigen::VectorXd row_payoff = Eigen::VectorXd::Zero(a.rows());
  Eigen::VectorXd col_payoff = Eigen::VectorXd::Zero(a.cols());

  const auto r0 = static_cast<Eigen::Index>(pure.maximin_rows.front());
  const auto c0 = static_cast<Eigen::Index>(pure.minimax_cols.front());
  row_counts(r0) += 1.0;
  col_counts(c0) += 1.0;
  row_payoff += a.col(c0);
  col_payoff += a.row(r0).transpose();

  double best_gap = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_rows, best_cols;
  double best_lower = 0.0, best_upper = 0.0;

  auto make_solution = [&](const Eigen::VectorXd& rc, const Eigen::VectorXd& cc,
                           double lower, double upper, std::uint64_t iters) {
    double lo = std::max(lower, pure.maximin);
    double hi = std::min(upper, pure.minimax);
    if (lo > hi) {
      lo = lower;
      hi = upper;
    }
    return GameSolution{StrategyMixture(Normalized(rc)),
                        StrategyMixture(Normalized(cc)),
                        0.5 * (lo + hi),
                        SolveMethod::kFictitiousPlay,
                        std::max(0.0, upper - lower),
                        iters};
  };

  for (std::uint64_t t = 1;; ++t) {
    const double upper = row_payoff.maxCoeff() / static_cast<double>(t);
    const double lower = col_payoff.minCoeff() / static_cast<double>(t);
    const double gap = upper - lower;
    if (gap < best_gap) {
      best_gap = gap;
      best_rows = row_counts;
      best_cols = col_counts;
      best_lower = lower;
      best_upper = upper;
    }
    if (gap <= options.tol) {
      return make_solution(row_counts, col_counts, lower, upper, t);
    }
    if (t >= options.max_iterations) {
      throw NonConvergenceError(
          "fictitious play did not reach tolerance within " +
              std::to_string(options.max_iterations) + " iterations",
          make_solution(best_rows, best_cols, best_lower, best_upper, t));
    }
    // Alternating updates: the column player answers the row history that
    // already includes this round's row. Far faster in practice than
    // simultaneous updates.
    Eigen::Index r = 0, c = 0;
    row_payoff.maxCoeff(&r);
    row_counts(r) += 1.0;
    col_payoff += a.row(r).transpose();
    col_payoff.minCoeff(&c);
    col_counts(c) += 1.0;
    row_payoff += a.col(c);
  }
}

GameSolution SolveMixed(const PayoffMatrix& m, const SolverOptions& options) {
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("solver tolerance must be > 0");
  }
  const auto saddles = SaddlePoints(m);
  if (!saddles.empty()) {
    const auto [r, c] = saddles.front();
    return GameSolution{StrategyMixture::Pure(m.rows(), r),
                        StrategyMixture::Pure(m.cols(), c),
                        m(r, c),
                        SolveMethod::kPureSaddle,
                        0.0,
                        0};
  }
  if (std::min(m.rows(), m.cols()) <= options.enumeration_limit) {
    if (auto exact = SolveBySupportEnumeration(m, options.tol)) return *exact;
  }
  return SolveByFictitiousPlay(m, options);
}

}  // namespace sysgame
