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

#ifndef SYSGAME_RNG_H_
#define SYSGAME_RNG_H_

#include <cstdint>
#include <limits>

namespace sysgame {

// SplitMix64 (Steele, Lea & Flood 2014). The state advances by the golden
// gamma 0x9e3779b97f4a7c15 and each output is the state passed through the
// variant-13 finalizer:
//
//   z = (state += 0x9e3779b97f4a7c15);
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//   return z ^ (z >> 31);
//
// Derived quantities are fixed so that streams are reproducible anywhere:
//   NextUnit()    = (Next() >> 11) * 2^-53, in [0, 1)
//   NextBelow(n)  = Next() % n after rejecting draws below (2^64 - n) % n
//   Split()       = SplitMix64(Next())
// Do not use the standard <random> distributions with this engine when the
// output must be portable; their algorithms are implementation-defined.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  double NextUnit();
  std::uint64_t NextBelow(std::uint64_t bound);
  SplitMix64 Split() { return SplitMix64(Next()); }

  result_type operator()() { return Next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t state_;
};

}  // namespace sysgame

#endif  // SYSGAME_RNG_H_
