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

#ifndef SYSGAME_PAYOFF_H_
#define SYSGAME_PAYOFF_H_

// Time-dependent payoffs of the garbage-collection game between users
// (maximizer) and the administrator (minimizer). Rates are fractions of the
// total resource pool per hour and every payoff is the cumulative value up to
// time T, so the pool R_tot is the unit.

#include <array>
#include <string_view>

#include "sysgame/game.h"

namespace sysgame {

struct ScenarioParams {
  int n_good = 99;
  int n_bad = 1;
  double rate_good = 0.01;
  double rate_bad = 0.99;
  double rate_auto = 0.1;
  double user_period_hours = 24.0;
  double auto_period_hours = 24.0;
  double threshold_hours = 0.0;  // t_0 for "tidy above threshold"
  double auto_phase_rad = 0.0;   // tidying phase relative to users
  bool clamp_auto = true;        // tidier never reclaims more than used
};

// Throws std::invalid_argument describing the first offending field.
void Validate(const ScenarioParams& p);

enum class PayoffKind { kGoodUsers, kBadUsers, kAllUsers, kAuto, kQuota };

std::string_view ToString(PayoffKind kind);

// (n_b r_b + n_g r_g) / (n_b + n_g).
double CombinedUserRate(const ScenarioParams& p);

// Closed form of  1/2 * int_0^T rate * (sin(2 pi t / period + phase) + 1) dt.
double HalfPeriodicIntegral(double rate, double period_hours, double phase_rad,
                            double t_hours);

// Cumulative payoff of one contribution at time T >= 0. kAuto is negative
// and, with clamp_auto, limited to |pi_a| <= pi_u(T). kQuota does not depend
// on T. Throws std::invalid_argument for negative or non-finite T.
double CumulativePayoff(PayoffKind kind, double t_hours,
                        const ScenarioParams& p);

struct PayoffBreakdown {
  double pi_g = 0.0;
  double pi_b = 0.0;
  double pi_u = 0.0;
  double pi_a_raw = 0.0;      // before clamping
  double pi_a_clamped = 0.0;  // max(pi_a_raw, -pi_u)
  double pi_a = 0.0;          // the one the matrix uses (per clamp_auto)
  double pi_q = 0.0;
};

PayoffBreakdown Breakdown(double t_hours, const ScenarioParams& p);

inline constexpr std::array<std::string_view, 4> kUserStrategies = {
    "tidy_when_asked", "never_tidy", "conceal_files", "change_timestamps"};
inline constexpr std::array<std::string_view, 4> kSystemStrategies = {
    "ask_to_tidy", "tidy_by_date", "tidy_above_threshold", "quotas"};

inline constexpr std::size_t kConcealFilesRow = 2;
inline constexpr std::size_t kQuotaColumn = 3;

// 1 when t >= threshold, else 0.
double ThresholdStep(double t_hours, double threshold_hours);

struct TidyingGame {
  PayoffMatrix matrix;
  PayoffBreakdown payoffs;
  double theta = 0.0;
  // pi_u > 1/2: the unopposed-user payoff 1/2 + pi_u has left [-1, 1] and
  // the payoffs are past the range where the model is meaningful. With the
  // auto payoff clamped this is the same as any entry leaving [-1, 1].
  bool saturated = false;
};

// The 4x4 characteristic matrix (rows: kUserStrategies, columns:
// kSystemStrategies):
//
//   -1/2+pi_g   -1/2+pi_g        -1/2+pi_g              pi_q
//    1/2+pi_u    1/2+pi_u+pi_a    1/2+pi_u+pi_a*theta    pi_q
//    1/2+pi_u    1/2+pi_u         1/2+pi_u               pi_q
//    1/2+pi_u    1/2+pi_u         1/2+pi_u+pi_a*theta    pi_q
TidyingGame CharacteristicMatrix(double t_hours, const ScenarioParams& p);

struct RegimeGame {
  PayoffMatrix matrix;
  bool saturated = false;
  bool quota_included = false;
};

// The game actually in play at time T. Before saturation users are not yet
// constrained by a quota, so the administrator's quota column is left out
// (4x3); once saturated the full 4x4 matrix applies and the quota column
// fixes the value at pi_q.
RegimeGame RegimeMatrix(double t_hours, const ScenarioParams& p);

}  // namespace sysgame

#endif  // SYSGAME_PAYOFF_H_
