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

#include "sysgame/payoff.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace sysgame {
namespace {

void RequireRate(double rate, const char* name) {
  if (!std::isfinite(rate) || rate < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
  }
}

void RequirePeriod(double period, const char* name) {
  if (!std::isfinite(period) || period <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}

void RequireTime(double t_hours) {
  if (!std::isfinite(t_hours) || t_hours < 0.0) {
    throw std::invalid_argument("time must be finite and >= 0, got " +
                                std::to_string(t_hours));
  }
}

double QuotaPayoff(const ScenarioParams& p) {
  return 0.5 / static_cast<double>(p.n_good + p.n_bad);
}

std::vector<std::string> Labels(const auto& names) {
  return {names.begin(), names.end()};
}

}  // namespace

void Validate(const ScenarioParams& p) {
  if (p.n_good < 0 || p.n_bad < 0) {
    throw std::invalid_argument("user counts must be >= 0");
  }
  if (p.n_good + p.n_bad < 1) {
    throw std::invalid_argument("need at least one user");
  }
  RequireRate(p.rate_good, "rate_good");
  RequireRate(p.rate_bad, "rate_bad");
  RequireRate(p.rate_auto, "rate_auto");
  RequirePeriod(p.user_period_hours, "user_period_hours");
  RequirePeriod(p.auto_period_hours, "auto_period_hours");
  if (!std::isfinite(p.threshold_hours) || p.threshold_hours < 0.0) {
    throw std::invalid_argument("threshold_hours must be finite and >= 0");
  }
  if (!std::isfinite(p.auto_phase_rad)) {
    throw std::invalid_argument("auto_phase_rad must be finite");
  }
}

std::string_view ToString(PayoffKind kind) {
  switch (kind) {
    case PayoffKind::kGoodUsers:
      return "good_users";
    case PayoffKind::kBadUsers:
      return "bad_users";
    case PayoffKind::kAllUsers:
      return "all_users";
    case PayoffKind::kAuto:
      return "auto";
    case PayoffKind::kQuota:
      return "quota";
  }
  return "unknown";
}

double CombinedUserRate(const ScenarioParams& p) {
  Validate(p);
  const double nb = p.n_bad;
  const double ng = p.n_good;
  return (nb * p.rate_bad + ng * p.rate_good) / (nb + ng);
}

double HalfPeriodicIntegral(double rate, double period_hours, double phase_rad,
                            double t_hours) {
  const double omega = 2.0 * std::numbers::pi / period_hours;
  const double oscillation =
      (std::cos(phase_rad) - std::cos(omega * t_hours + phase_rad)) / omega;
  return 0.5 * rate * (t_hours + oscillation);
}

double CumulativePayoff(PayoffKind kind, double t_hours,
                        const ScenarioParams& p) {
  Validate(p);
  RequireTime(t_hours);
  switch (kind) {
    case PayoffKind::kGoodUsers:
      return HalfPeriodicIntegral(p.rate_good, p.user_period_hours, 0.0,
                                  t_hours);
    case PayoffKind::kBadUsers:
      return HalfPeriodicIntegral(p.rate_bad, p.user_period_hours, 0.0,
                                  t_hours);
    case PayoffKind::kAllUsers:
      return HalfPeriodicIntegral(CombinedUserRate(p), p.user_period_hours, 0.0,
                                  t_hours);
    case PayoffKind::kAuto: {
      const double raw = -HalfPeriodicIntegral(p.rate_auto, p.auto_period_hours,
                                               p.auto_phase_rad, t_hours);
      if (!p.clamp_auto) return raw;
      return std::max(raw,
                      -CumulativePayoff(PayoffKind::kAllUsers, t_hours, p));
    }
    case PayoffKind::kQuota:
      return QuotaPayoff(p);
  }
  throw std::invalid_argument("unknown payoff kind");
}

PayoffBreakdown Breakdown(double t_hours, const ScenarioParams& p) {
  Validate(p);
  RequireTime(t_hours);
  PayoffBreakdown b;
  b.pi_g = CumulativePayoff(PayoffKind::kGoodUsers, t_hours, p);
  b.pi_b = CumulativePayoff(PayoffKind::kBadUsers, t_hours, p);
  b.pi_u = CumulativePayoff(PayoffKind::kAllUsers, t_hours, p);
  b.pi_a_raw = -HalfPeriodicIntegral(p.rate_auto, p.auto_period_hours,
                                     p.auto_phase_rad, t_hours);
  b.pi_a_clamped = std::max(b.pi_a_raw, -b.pi_u);
  b.pi_a = p.clamp_auto ? b.pi_a_clamped : b.pi_a_raw;
  b.pi_q = QuotaPayoff(p);
  return b;
}

double ThresholdStep(double t_hours, double threshold_hours) {
  return t_hours >= threshold_hours ? 1.0 : 0.0;
}

TidyingGame CharacteristicMatrix(double t_hours, const ScenarioParams& p) {
  const PayoffBreakdown b = Breakdown(t_hours, p);
  const double theta = ThresholdStep(t_hours, p.threshold_hours);

  const double tidy = -0.5 + b.pi_g;
  const double take = 0.5 + b.pi_u;
  const double tidied = 0.5 + b.pi_u + b.pi_a;
  const double after_threshold = 0.5 + b.pi_u + b.pi_a * theta;

  Eigen::MatrixXd m(4, 4);
  // clang-format off
  m << tidy, tidy, tidy, b.pi_q,
       take, tidied, after_threshold, b.pi_q,
       take, take, take, b.pi_q,
       take, take, after_threshold, b.pi_q;
  // clang-format on

  const bool saturated = b.pi_u > 0.5;
  return TidyingGame{PayoffMatrix(std::move(m), Labels(kUserStrategies),
                                  Labels(kSystemStrategies)),
                     b, theta, saturated};
}

RegimeGame RegimeMatrix(double t_hours, const ScenarioParams& p) {
  TidyingGame game = CharacteristicMatrix(t_hours, p);
  if (game.saturated) return RegimeGame{std::move(game.matrix), true, true};
  return RegimeGame{game.matrix.WithoutColumn(kQuotaColumn), false, false};
}

}  // namespace sysgame
