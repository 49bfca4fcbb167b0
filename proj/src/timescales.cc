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

#include "sysgame/timescales.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sysgame {
namespace {

constexpr double kDayHours = 24.0;

void RequireNonNegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
  }
}

}  // namespace

void Validate(const AutoAgent& agent) {
  if (!std::isfinite(agent.period_hours) || agent.period_hours <= 0.0) {
    throw std::invalid_argument("period_hours must be finite and > 0");
  }
  RequireNonNegative(agent.exec_hours, "exec_hours");
  RequireNonNegative(agent.decision_hours, "decision_hours");
  if (agent.period_hours < agent.exec_hours) {
    throw std::invalid_argument("period_hours must be >= exec_hours");
  }
}

void Validate(const HumanAgent& agent) {
  RequireNonNegative(agent.decision_hours, "decision_hours");
  RequireNonNegative(agent.exec_hours, "exec_hours");
  RequireNonNegative(agent.wait_base_hours, "wait_base_hours");
  if (agent.wait_override_hours) {
    RequireNonNegative(*agent.wait_override_hours, "wait_override_hours");
  }
}

ResponseBounds AutoResponseBounds(const AutoAgent& agent) {
  Validate(agent);
  return {agent.exec_hours,
          agent.iterations * agent.period_hours + agent.exec_hours};
}

double HumanWait(double t_hours, const HumanAgent& agent) {
  Validate(agent);
  if (agent.wait_override_hours) return *agent.wait_override_hours;
  const double phase = 2.0 * std::numbers::pi * t_hours / kDayHours;
  // 1 + sin can dip a few ulps below zero at the trough.
  return std::max(0.0, agent.wait_base_hours * (1.0 + std::sin(phase)));
}

double HumanBestResponse(double t_hours, const HumanAgent& agent) {
  return HumanWait(t_hours, agent) + agent.decision_hours + agent.exec_hours;
}

std::string_view ToString(DuelWinner winner) {
  switch (winner) {
    case DuelWinner::kAuto:
      return "auto";
    case DuelWinner::kHuman:
      return "human";
    case DuelWinner::kTie:
      return "tie";
  }
  return "unknown";
}

DuelOutcome Duel(const AutoAgent& automatic, const HumanAgent& human,
                 double incident_t_hours) {
  DuelOutcome out;
  out.auto_worst_hours =
      AutoResponseBounds(automatic).upper_hours + automatic.decision_hours;
  out.human_best_hours = HumanBestResponse(incident_t_hours, human);
  if (out.auto_worst_hours < out.human_best_hours) {
    out.winner = DuelWinner::kAuto;
  } else if (out.auto_worst_hours > out.human_best_hours) {
    out.winner = DuelWinner::kHuman;
  } else {
    out.winner = DuelWinner::kTie;
  }
  return out;
}

}  // namespace sysgame
