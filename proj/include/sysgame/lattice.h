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

#ifndef SYSGAME_LATTICE_H_
#define SYSGAME_LATTICE_H_

// Deviations from the ideal state as points on the nonnegative integer
// lattice N^n. The origin is the ideal state; each axis counts accumulated
// drift of one system variable.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sysgame {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class DeviationVector {
 public:
  // Throws std::invalid_argument for an empty component list.
  explicit DeviationVector(std::vector<std::uint64_t> components);

  static DeviationVector Origin(std::size_t dims);

  const std::vector<std::uint64_t>& components() const { return components_; }
  std::size_t dims() const { return components_.size(); }
  std::uint64_t operator[](std::size_t axis) const { return components_[axis]; }

  std::uint64_t Total() const;
  bool IsOrigin() const;

  // Copy with one axis moved by +1. Axis is zero-based.
  DeviationVector Incremented(std::size_t axis) const;

  friend bool operator==(const DeviationVector&,
                         const DeviationVector&) = default;

 private:
  std::vector<std::uint64_t> components_;
};

// Number of monotone lattice paths from the origin to d, i.e. the
// multinomial coefficient (sum d)! / prod(d_k!). Exact.
BigInt PathCount(const DeviationVector& d);

// ln PathCount(d) through log-gamma; usable when the exact value is huge.
double LogPathCount(const DeviationVector& d);

// PathCount(d + e_axis) - PathCount(d).
BigInt PathGradient(const DeviationVector& d, std::size_t axis);

// Relative growth of the path count along one axis,
//   (H(d + e_i) - H(d)) / H(d) = (sum_{j != i} d_j) / (d_i + 1),
// evaluated from the closed form. Axis is zero-based; throws
// std::out_of_range if axis >= d.dims().
BigRational RelativeGradient(const DeviationVector& d, std::size_t axis);

double EuclideanNorm(const DeviationVector& d);

struct WalkTrajectory {
  std::vector<DeviationVector> states;  // states[0] is the origin
  std::uint64_t seed = 0;
  std::uint64_t step_count = 0;
};

// Seeded random walk on N^dims starting at the origin. Each step draws an
// axis uniformly (SplitMix64::NextBelow) and then a unit draw u; the axis is
// incremented when u < drift_up_prob, otherwise decremented. A decrement at
// zero leaves the state unchanged but is still recorded as a step, so the
// trajectory always has steps + 1 states.
//
// Throws std::invalid_argument for dims == 0 or drift_up_prob outside [0, 1].
WalkTrajectory RandomWalk(std::size_t dims, std::uint64_t steps,
                          double drift_up_prob, std::uint64_t seed);

}  // namespace sysgame

#endif  // SYSGAME_LATTICE_H_
