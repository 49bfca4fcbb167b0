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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.h"
#include "sysgame/rng.h"

namespace sysgame {
namespace {

using testing::AdaptiveIntegral;
using testing::PayoffIntegrand;

// 99 good users at 1% of the pool per hour, one bad user at 99%, daily
// tidying at 10% per hour.
ScenarioParams OnePercentMischief() { return ScenarioParams{}; }

ScenarioParams RandomParams(SplitMix64& rng) {
  ScenarioParams p;
  p.n_good = 1 + static_cast<int>(rng.NextBelow(200));
  p.n_bad = static_cast<int>(rng.NextBelow(20));
  p.rate_good = rng.NextUnit() * 0.05;
  p.rate_bad = p.rate_good + rng.NextUnit();
  p.rate_auto = rng.NextUnit() * 0.5;
  p.user_period_hours = 1.0 + rng.NextUnit() * 47.0;
  p.auto_period_hours = 0.5 + rng.NextUnit() * 47.0;
  p.threshold_hours = rng.NextUnit() * 72.0;
  p.clamp_auto = rng.NextBelow(2) == 0;
  return p;
}

TEST(ScenarioParamsTest, Validation) {
  ScenarioParams p;
  EXPECT_NO_THROW(Validate(p));
  p.n_good = 0;
  p.n_bad = 0;
  EXPECT_THROW(Validate(p), std::invalid_argument);
  p = {};
  p.rate_auto = -0.1;
  EXPECT_THROW(Validate(p), std::invalid_argument);
  p = {};
  p.auto_period_hours = 0.0;
  EXPECT_THROW(Validate(p), std::invalid_argument);
  p = {};
  p.n_good = 0;  // bad users only is allowed
  EXPECT_NO_THROW(Validate(p));
}

TEST(CombinedUserRateTest, Examples) {
  EXPECT_NEAR(CombinedUserRate(OnePercentMischief()), 0.0198, 1e-15);
  ScenarioParams p;
  p.n_bad = 0;
  EXPECT_DOUBLE_EQ(CombinedUserRate(p), p.rate_good);
  p = {};
  p.rate_good = p.rate_bad = 0.3;
  EXPECT_DOUBLE_EQ(CombinedUserRate(p), 0.3);
}

TEST(CombinedUserRateTest, BetweenTheTwoRates) {
  SplitMix64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const ScenarioParams p = RandomParams(rng);
    const double r = CombinedUserRate(p);
    EXPECT_GE(r, std::min(p.rate_good, p.rate_bad) - 1e-15);
    EXPECT_LE(r, std::max(p.rate_good, p.rate_bad) + 1e-15);
  }
}

TEST(CumulativePayoffTest, Examples) {
  ScenarioParams p = OnePercentMischief();
  EXPECT_DOUBLE_EQ(CumulativePayoff(PayoffKind::kQuota, 0.0, p), 0.005);
  EXPECT_DOUBLE_EQ(CumulativePayoff(PayoffKind::kQuota, 1000.0, p), 0.005);
  EXPECT_NEAR(CumulativePayoff(PayoffKind::kAllUsers, 24.0, p), 0.2376, 1e-12);
  EXPECT_NEAR(CumulativePayoff(PayoffKind::kAuto, 24.0, p), -0.2376, 1e-12);
  p.clamp_auto = false;
  EXPECT_NEAR(CumulativePayoff(PayoffKind::kAuto, 24.0, p), -1.2, 1e-12);
}

TEST(CumulativePayoffTest, RejectsNegativeTime) {
  EXPECT_THROW(CumulativePayoff(PayoffKind::kGoodUsers, -1.0, {}),
               std::invalid_argument);
  EXPECT_THROW(Breakdown(std::nan(""), {}), std::invalid_argument);
}

TEST(CumulativePayoffTest, ZeroAtTimeZero) {
  const ScenarioParams p;
  for (auto kind : {PayoffKind::kGoodUsers, PayoffKind::kBadUsers,
                    PayoffKind::kAllUsers, PayoffKind::kAuto}) {
    EXPECT_NEAR(CumulativePayoff(kind, 0.0, p), 0.0, 1e-18) << ToString(kind);
  }
}

TEST(CumulativePayoffTest, ClosedFormMatchesQuadrature) {
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    ScenarioParams p = RandomParams(rng);
    p.auto_phase_rad = rng.NextUnit() * 2.0 * std::numbers::pi;
    p.clamp_auto = false;
    const double t = rng.NextUnit() * 100.0;
    auto check = [&](PayoffKind kind, double rate, double period, double phase,
                     double sign) {
      const double expected =
          sign *
          AdaptiveIntegral(
              [&](double s) { return PayoffIntegrand(rate, period, phase, s); },
              0.0, t);
      const double got = CumulativePayoff(kind, t, p);
      EXPECT_LE(std::abs(got - expected),
                1e-9 * std::max(1.0, std::abs(expected)))
          << ToString(kind) << " t=" << t;
    };
    check(PayoffKind::kGoodUsers, p.rate_good, p.user_period_hours, 0.0, 1.0);
    check(PayoffKind::kBadUsers, p.rate_bad, p.user_period_hours, 0.0, 1.0);
    check(PayoffKind::kAllUsers, CombinedUserRate(p), p.user_period_hours, 0.0,
          1.0);
    check(PayoffKind::kAuto, p.rate_auto, p.auto_period_hours, p.auto_phase_rad,
          -1.0);
  }
}

TEST(CumulativePayoffTest, UserPayoffsNondecreasing) {
  SplitMix64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const ScenarioParams p = RandomParams(rng);
    for (auto kind : {PayoffKind::kGoodUsers, PayoffKind::kBadUsers,
                      PayoffKind::kAllUsers}) {
      double prev = CumulativePayoff(kind, 0.0, p);
      for (int k = 1; k <= 200; ++k) {
        const double cur = CumulativePayoff(kind, 0.37 * k, p);
        ASSERT_GE(cur, prev - 1e-15);
        prev = cur;
      }
    }
  }
}

TEST(BreakdownTest, SignsAndClamp) {
  SplitMix64 rng(8);
  for (int i = 0; i < 500; ++i) {
    ScenarioParams p = RandomParams(rng);
    const double t = rng.NextUnit() * 80.0;
    const PayoffBreakdown b = Breakdown(t, p);
    EXPECT_LE(b.pi_a, 0.0);
    EXPECT_GE(b.pi_g, 0.0);
    EXPECT_GE(b.pi_b, 0.0);
    EXPECT_GE(b.pi_u, 0.0);
    EXPECT_GT(b.pi_q, 0.0);
    EXPECT_LE(std::abs(b.pi_a_clamped), b.pi_u + 1e-15);
    if (p.clamp_auto) EXPECT_LE(std::abs(b.pi_a), b.pi_u + 1e-15);
    // rate_bad >= rate_good in RandomParams.
    EXPECT_GE(b.pi_u, b.pi_g - 1e-15);
    EXPECT_GE(b.pi_b, b.pi_g - 1e-15);
  }
}

TEST(CharacteristicMatrixTest, QuotaColumnConstant) {
  const ScenarioParams p;
  for (double t : {0.0, 1.0, 12.0, 24.0, 100.0}) {
    const PayoffMatrix m = CharacteristicMatrix(t, p).matrix;
    for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(m(r, 3), 0.005);
  }
}

TEST(CharacteristicMatrixTest, Examples) {
  ScenarioParams p;
  p.threshold_hours = 48.0;
  TidyingGame g = CharacteristicMatrix(24.0, p);
  EXPECT_EQ(g.theta, 0.0);
  EXPECT_NEAR(g.matrix(1, 2), 0.7376, 1e-12);

  p.threshold_hours = 0.0;
  g = CharacteristicMatrix(24.0, p);
  EXPECT_EQ(g.theta, 1.0);
  EXPECT_NEAR(g.matrix(1, 1), 0.5, 1e-12);
  EXPECT_FALSE(g.saturated);
  EXPECT_EQ(g.matrix.row_labels()[kConcealFilesRow], "conceal_files");
  EXPECT_EQ(g.matrix.col_labels()[kQuotaColumn], "quotas");
}

TEST(CharacteristicMatrixTest, ThresholdStep) {
  EXPECT_EQ(ThresholdStep(47.9, 48.0), 0.0);
  EXPECT_EQ(ThresholdStep(48.0, 48.0), 1.0);
  EXPECT_EQ(ThresholdStep(0.0, 0.0), 1.0);
}

TEST(CharacteristicMatrixTest, StructuralIdentities) {
  SplitMix64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const ScenarioParams p = RandomParams(rng);
    const double t = rng.NextUnit() * 80.0;
    const TidyingGame g = CharacteristicMatrix(t, p);
    const PayoffMatrix& m = g.matrix;
    const PayoffBreakdown& b = g.payoffs;
    // Row 1 is constant over the first three columns.
    EXPECT_EQ(m(0, 0), m(0, 1));
    EXPECT_EQ(m(0, 1), m(0, 2));
    // The unopposed-user cells.
    for (auto [r, c] :
         {std::pair{1, 0}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
      EXPECT_EQ(m(r, c), m(1, 0));
    }
    EXPECT_EQ(m(1, 2), m(3, 2));
    for (std::size_t r = 1; r < 4; ++r) EXPECT_EQ(m(r, 3), m(0, 3));

    const double take = 0.5 + b.pi_u;
    const double threshold = 0.5 + b.pi_u + b.pi_a * g.theta;
    const double tidied = 0.5 + b.pi_u + b.pi_a;
    EXPECT_GE(take, threshold);
    EXPECT_GE(threshold, tidied);
    if (b.pi_u >= b.pi_g) {
      EXPECT_GE(std::abs(0.5 + b.pi_u), std::abs(b.pi_g - 0.5));
    }

    EXPECT_EQ(g.saturated, b.pi_u > 0.5);
    if (p.clamp_auto) {
      const bool in_range = (m.entries().array().abs() <= 1.0).all();
      EXPECT_EQ(g.saturated, !in_range);
    }
  }
}

TEST(RegimeMatrixTest, QuotaColumnOnlyOnceSaturated) {
  const ScenarioParams p;
  RegimeGame early = RegimeMatrix(12.0, p);
  EXPECT_FALSE(early.saturated);
  EXPECT_FALSE(early.quota_included);
  EXPECT_EQ(early.matrix.cols(), 3u);

  RegimeGame late = RegimeMatrix(96.0, p);
  EXPECT_TRUE(late.saturated);
  EXPECT_TRUE(late.quota_included);
  EXPECT_EQ(late.matrix.cols(), 4u);
}

}  // namespace
}  // namespace sysgame
