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

#ifndef SYSGAME_TIMESCALES_H_
#define SYSGAME_TIMESCALES_H_

// Response-time model for automatic and human maintenance agents. All times
// are in hours.

#include <cstdint>
#include <optional>
#include <string_view>

namespace sysgame {

// A periodically scheduled repair agent (cron-style).
struct AutoAgent {
  double period_hours = 0.5;          // scheduling period T_p
  double exec_hours = 10.0 / 3600.0;  // execution time T_e(A)
  std::uint32_t iterations = 0;       // extra runs needed to fix, n
  double decision_hours = 0.0;        // T_d(A), normally negligible
};

struct HumanAgent {
  double decision_hours = 0.05;               // T_d(H)
  double exec_hours = 0.05;                   // T_e(H)
  double wait_base_hours = 4.0;               // amplitude of the diurnal wait
  std::optional<double> wait_override_hours;  // fixed T_w(H) when set
};

// Throw std::invalid_argument on negative or non-finite fields, a
// non-positive period, or period < exec time.
void Validate(const AutoAgent& agent);
void Validate(const HumanAgent& agent);

struct ResponseBounds {
  double lower_hours = 0.0;
  double upper_hours = 0.0;
};

// [T_e(A), n T_p + T_e(A)].
ResponseBounds AutoResponseBounds(const AutoAgent& agent);

// Human wait time at wall-clock hour t: the override when set, otherwise
// wait_base * (1 + sin(2 pi t / 24)). Peaks at t = 6, vanishes at t = 18.
double HumanWait(double t_hours, const HumanAgent& agent);

// T_w(H)(t) + T_d(H) + T_e(H).
double HumanBestResponse(double t_hours, const HumanAgent& agent);

enum class DuelWinner { kAuto, kHuman, kTie };

std::string_view ToString(DuelWinner winner);

struct DuelOutcome {
  DuelWinner winner = DuelWinner::kTie;
  double auto_worst_hours = 0.0;
  double human_best_hours = 0.0;
};

// Races the automatic agent's worst case (upper bound plus its decision
// time) against the human's best case for an incident at t. Equal totals
// are reported as a tie.
DuelOutcome Duel(const AutoAgent& automatic, const HumanAgent& human,
                 double incident_t_hours);

}  // namespace sysgame

#endif  // SYSGAME_TIMESCALES_H_
