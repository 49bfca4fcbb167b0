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

#ifndef SYSGAME_CLI_H_
#define SYSGAME_CLI_H_

// Command-line front end. RunCli is the whole program minus process
// plumbing, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sysgame/game.h"
#include "sysgame/lattice.h"
#include "sysgame/metrics.h"
#include "sysgame/timescales.h"

namespace sysgame {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;  // bad flags or config
inline constexpr int kExitIo = 3;
inline constexpr int kExitNoConvergence = 4;

// args excludes the program name. Results go to `out`; failures print a
// JSON object {"error": {"type", "message", ["key"]}} to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// A JSON 2-D array, or CSV whose first line holds column labels. CSV rows
// may start with a non-numeric row label, in which case the header's first
// cell is the corner and is ignored.
PayoffMatrix ParseMatrix(const std::string& text);
PayoffMatrix LoadMatrix(const std::string& path);

// "3,2,0" -> (3, 2, 0).
DeviationVector ParseDeviationVector(const std::string& text);

struct DuelConfig {
  AutoAgent automatic;
  HumanAgent human;
};

// {"auto": {...}, "human": {...}} with AutoAgent / HumanAgent field names;
// strict about unknown keys.
DuelConfig ParseDuelConfig(const nlohmann::ordered_json& doc);

// DistributionParams field names; strict about unknown keys.
DistributionParams ParseDistributionConfig(const nlohmann::ordered_json& doc);

}  // namespace sysgame

#endif  // SYSGAME_CLI_H_
