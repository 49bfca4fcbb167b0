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

#include "sysgame/lattice.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "sysgame/rng.h"

namespace sysgame {

DeviationVector::DeviationVector(std::vector<std::uint64_t> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("DeviationVector needs at least one axis");
  }
}

DeviationVector DeviationVector::Origin(std::size_t dims) {
  return DeviationVector(std::vector<std::uint64_t>(dims, 0));
}

std::uint64_t DeviationVector::Total() const {
  return std::accumulate(components_.begin(), components_.end(),
                         std::uint64_t{0});
}

bool DeviationVector::IsOrigin() const {
  for (auto c : components_) {
    if (c != 0) return false;
  }
  return true;
}

DeviationVector DeviationVector::Incremented(std::size_t axis) const {
  if (axis >= components_.size()) {
    throw std::out_of_range("axis " + std::to_string(axis) +
                            " out of range for dimension " +
                            std::to_string(components_.size()));
  }
  auto next = components_;
  ++next[axis];
  return DeviationVector(std::move(next));
}

BigInt PathCount(const DeviationVector& d) {
  // Product of binomials C(s_k, d_k) with s_k the running total. After each
  // inner step the accumulator is prev * C(running, j), so the division is
  // always exact.
  BigInt result = 1;
  std::uint64_t running = 0;
  for (auto dk : d.components()) {
    for (std::uint64_t j = 1; j <= dk; ++j) {
      ++running;
      result *= running;
      result /= j;
    }
  }
  return result;
}

double LogPathCount(const DeviationVector& d) {
  double log_h = std::lgamma(static_cast<double>(d.Total()) + 1.0);
  for (auto dk : d.components()) {
    log_h -= std::lgamma(static_cast<double>(dk) + 1.0);
  }
  return log_h;
}

BigInt PathGradient(const DeviationVector& d, std::size_t axis) {
  return PathCount(d.Incremented(axis)) - PathCount(d);
}

BigRational RelativeGradient(const DeviationVector& d, std::size_t axis) {
  if (axis >= d.dims()) {
    throw std::out_of_range("axis " + std::to_string(axis) +
                            " out of range for dimension " +
                            std::to_string(d.dims()));
  }
  BigInt others = BigInt(d.Total()) - d[axis];
  return BigRational(others, BigInt(d[axis]) + 1);
}

double EuclideanNorm(const DeviationVector& d) {
  double sum = 0.0;
  for (auto dk : d.components()) {
    const auto x = static_cast<double>(dk);
    sum += x * x;
  }
  return std::sqrt(sum);
}

WalkTrajectory RandomWalk(std::size_t dims, std::uint64_t steps,
                          double drift_up_prob, std::uint64_t seed) {
  if (dims == 0) throw std::invalid_argument("random walk needs dims >= 1");
  if (!(drift_up_prob >= 0.0 && drift_up_prob <= 1.0)) {
    throw std::invalid_argument("drift_up_prob must lie in [0, 1]");
  }
  WalkTrajectory walk;
  walk.seed = seed;
  walk.step_count = steps;
  walk.states.reserve(steps + 1);

  SplitMix64 rng(seed);
  std::vector<std::uint64_t> position(dims, 0);
  walk.states.emplace_back(position);
  for (std::uint64_t s = 0; s < steps; ++s) {
    const auto axis = static_cast<std::size_t>(rng.NextBelow(dims));
    const bool up = rng.NextUnit() < drift_up_prob;
    if (up) {
      ++position[axis];
    } else if (position[axis] > 0) {
      --position[axis];
    }
    walk.states.emplace_back(position);
  }
  return walk;
}

}  // namespace sysgame
