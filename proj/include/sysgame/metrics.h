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

#ifndef SYSGAME_METRICS_H_
#define SYSGAME_METRICS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sysgame {

// Counts of actions taken by a maintenance agent and the resources they used.
class ActionLog {
 public:
  // Throws std::invalid_argument unless 0 <= policy_actions <= total_actions,
  // total_actions >= 1 and 0 <= policy_resources <= total_resources with
  // total_resources > 0.
  ActionLog(std::uint64_t policy_actions, std::uint64_t total_actions,
            double policy_resources, double total_resources);

  std::uint64_t policy_actions() const { return policy_actions_; }
  std::uint64_t total_actions() const { return total_actions_; }
  double policy_resources() const { return policy_resources_; }
  double total_resources() const { return total_resources_; }

 private:
  std::uint64_t policy_actions_;
  std::uint64_t total_actions_;
  double policy_resources_;
  double total_resources_;
};

// Fraction of actions that implement policy, N_p / N.
double Accuracy(const ActionLog& log);

// Accuracy discounted by the share of resources spent on the policy.
double Efficiency(const ActionLog& log);

enum class PrimitiveAction {
  kCreateFile,
  kDeleteFile,
  kRenameFile,
  kEditFile,
  kAccessControl,
  kRequestResource,
  kCopyFile,
  kProcessControl,
  kProcessPriority,
  kConfigureDevice,
};

inline constexpr PrimitiveAction kAllPrimitiveActions[] = {
    PrimitiveAction::kCreateFile,      PrimitiveAction::kDeleteFile,
    PrimitiveAction::kRenameFile,      PrimitiveAction::kEditFile,
    PrimitiveAction::kAccessControl,   PrimitiveAction::kRequestResource,
    PrimitiveAction::kCopyFile,        PrimitiveAction::kProcessControl,
    PrimitiveAction::kProcessPriority, PrimitiveAction::kConfigureDevice,
};

std::string_view ToString(PrimitiveAction action);

// Shape parameters of the fluctuation distribution
//
//   D(l) = A exp(-(l - mean)^2 / (2 sigma^2))
//        + B / ((l - l0)^3 (exp(1 / ((l - l0) T)) - 1)),
//
// a Gaussian plus a Planck-like term with a hard cutoff at l0 (the second
// term is 0 for l <= l0). D is an unnormalized shape.
struct DistributionParams {
  double gauss_amp = 0.0;
  double gauss_mean = 0.0;
  double gauss_sigma = 1.0;
  double planck_amp = 1.0;
  double planck_origin = 0.0;
  double planck_temp = 1.0;
};

void Validate(const DistributionParams& p);

double PlanckGaussianDensity(double lambda, const DistributionParams& p);

// Integrals of the two terms over the real line: A sigma sqrt(2 pi) and
// B T^2 pi^2 / 6.
double GaussianMass(const DistributionParams& p);
double PlanckMass(const DistributionParams& p);

// Draws from D normalized. A term is picked in proportion to its mass; the
// Gaussian is sampled by Box-Muller and the Planck term by rejection in
// u = 1 / ((l - l0) T), whose density u / (e^u - 1) sits under the envelope
// exp(-u / 2). Uses SplitMix64(seed); bit-identical for a given seed.
// Throws std::domain_error when the envelope cannot be built (both masses
// zero or non-finite).
std::vector<double> SampleDistribution(const DistributionParams& p,
                                       std::uint64_t count, std::uint64_t seed);

struct TimePoint {
  double t = 0.0;
  double value = 0.0;
};

// Trailing mean over `window` points, stamped with the last point's time.
// Throws std::invalid_argument if window is 0 or longer than the series.
std::vector<TimePoint> MovingAverage(std::span<const TimePoint> series,
                                     std::size_t window);

// sin(omega t) * sum_n coeffs[n] t^n.
double WorkConsumption(double t, double omega, std::span<const double> coeffs);

}  // namespace sysgame

#endif  // SYSGAME_METRICS_H_
