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

#include "sysgame/metrics.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sysgame/rng.h"

namespace sysgame {
namespace {

// Above this the -1 in e^u - 1 is far below double resolution and the
// direct form risks inf / inf.
constexpr double kLargeExponent = 50.0;

double PlanckTerm(double lambda, const DistributionParams& p) {
  const double x = lambda - p.planck_origin;
  if (p.planck_amp == 0.0 || !(x > 0.0)) return 0.0;
  const double u = 1.0 / (x * p.planck_temp);
  const double ut = u * p.planck_temp;  // 1 / x
  if (u > kLargeExponent) {
    return p.planck_amp * std::exp(3.0 * std::log(ut) - u);
  }
  return p.planck_amp / (x * x * x * std::expm1(u));
}

}  // namespace

ActionLog::ActionLog(std::uint64_t policy_actions, std::uint64_t total_actions,
                     double policy_resources, double total_resources)
    : policy_actions_(policy_actions),
      total_actions_(total_actions),
      policy_resources_(policy_resources),
      total_resources_(total_resources) {
  if (total_actions_ == 0) {
    throw std::invalid_argument("action log needs at least one action");
  }
  if (policy_actions_ > total_actions_) {
    throw std::invalid_argument("policy actions exceed total actions");
  }
  if (!std::isfinite(total_resources_) || total_resources_ <= 0.0) {
    throw std::invalid_argument("total resources must be finite and > 0");
  }
  if (!std::isfinite(policy_resources_) || policy_resources_ < 0.0 ||
      policy_resources_ > total_resources_) {
    throw std::invalid_argument(
        "policy resources must lie in [0, total resources]");
  }
}

double Accuracy(const ActionLog& log) {
  return static_cast<double>(log.policy_actions()) /
         static_cast<double>(log.total_actions());
}

double Efficiency(const ActionLog& log) {
  return Accuracy(log) * (1.0 - log.policy_resources() / log.total_resources());
}

std::string_view ToString(PrimitiveAction action) {
  switch (action) {
    case PrimitiveAction::kCreateFile:
      return "create_file";
    case PrimitiveAction::kDeleteFile:
      return "delete_file";
    case PrimitiveAction::kRenameFile:
      return "rename_file";
    case PrimitiveAction::kEditFile:
      return "edit_file";
    case PrimitiveAction::kAccessControl:
      return "access_control";
    case PrimitiveAction::kRequestResource:
      return "request_resource";
    case PrimitiveAction::kCopyFile:
      return "copy_file";
    case PrimitiveAction::kProcessControl:
      return "process_control";
    case PrimitiveAction::kProcessPriority:
      return "process_priority";
    case PrimitiveAction::kConfigureDevice:
      return "configure_device";
  }
  return "unknown";
}

void Validate(const DistributionParams& p) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(p.gauss_amp) || !finite(p.gauss_mean) || !finite(p.gauss_sigma) ||
      !finite(p.planck_amp) || !finite(p.planck_origin) ||
      !finite(p.planck_temp)) {
    throw std::invalid_argument("distribution parameters must be finite");
  }
  if (p.gauss_amp < 0.0 || p.planck_amp < 0.0) {
    throw std::invalid_argument("amplitudes must be >= 0");
  }
  if (p.gauss_sigma <= 0.0) throw std::invalid_argument("sigma must be > 0");
  if (p.planck_temp <= 0.0) {
    throw std::invalid_argument("temperature must be > 0");
  }
  if (p.gauss_amp == 0.0 && p.planck_amp == 0.0) {
    throw std::invalid_argument("at least one amplitude must be > 0");
  }
}

double PlanckGaussianDensity(double lambda, const DistributionParams& p) {
  Validate(p);
  const double z = (lambda - p.gauss_mean) / p.gauss_sigma;
  const double gauss = p.gauss_amp * std::exp(-0.5 * z * z);
  return gauss + PlanckTerm(lambda, p);
}

double GaussianMass(const DistributionParams& p) {
  return p.gauss_amp * p.gauss_sigma * std::sqrt(2.0 * std::numbers::pi);
}

double PlanckMass(const DistributionParams& p) {
  constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  return p.planck_amp * p.planck_temp * p.planck_temp * kZeta2;
}

std::vector<double> SampleDistribution(const DistributionParams& p,
                                       std::uint64_t count,
                                       std::uint64_t seed) {
  if (count == 0) return {};
  const double gauss_mass = GaussianMass(p);
  const double planck_mass = PlanckMass(p);
  const double total = gauss_mass + planck_mass;
  if (!std::isfinite(total) || !(total > 0.0) || !(gauss_mass >= 0.0) ||
      !(planck_mass >= 0.0)) {
    throw std::domain_error(
        "cannot build a sampling envelope: component masses are " +
        std::to_string(gauss_mass) + " and " + std::to_string(planck_mass));
  }
  Validate(p);
  const double gauss_share = gauss_mass / total;

  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  while (out.size() < count) {
    if (rng.NextUnit() < gauss_share) {
      const double u1 = 1.0 - rng.NextUnit();  // (0, 1]
      const double u2 = rng.NextUnit();
      const double normal = std::sqrt(-2.0 * std::log(u1)) *
                            std::cos(2.0 * std::numbers::pi * u2);
      out.push_back(p.gauss_mean + p.gauss_sigma * normal);
      continue;
    }
    for (;;) {
      const double u = -2.0 * std::log1p(-rng.NextUnit());
      const double accept = rng.NextUnit();
      if (u == 0.0) continue;
      // u / (e^u - 1) divided by the envelope e^{-u/2}.
      const double ratio = u / (2.0 * std::sinh(0.5 * u));
      if (accept < ratio) {
        out.push_back(p.planck_origin + 1.0 / (u * p.planck_temp));
        break;
      }
    }
  }
  return out;
}

std::vector<TimePoint> MovingAverage(std::span<const TimePoint> series,
                                     std::size_t window) {
  if (window == 0) throw std::invalid_argument("window must be >= 1");
  if (window > series.size()) {
    throw std::invalid_argument("window of " + std::to_string(window) +
                                " points exceeds series length " +
                                std::to_string(series.size()));
  }
  std::vector<TimePoint> out;
  out.reserve(series.size() - window + 1);
  for (std::size_t end = window; end <= series.size(); ++end) {
    double sum = 0.0;
    for (std::size_t i = end - window; i < end; ++i) sum += series[i].value;
    out.push_back({series[end - 1].t, sum / static_cast<double>(window)});
  }
  return out;
}

double WorkConsumption(double t, double omega, std::span<const double> coeffs) {
  double poly = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    poly = poly * t + *it;
  }
  return std::sin(omega * t) * poly;
}

}  // namespace sysgame
