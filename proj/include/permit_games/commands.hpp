// Copyright 2026 The permit-games Authors
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

#ifndef PERMIT_GAMES_COMMANDS_HPP
#define PERMIT_GAMES_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "permit_games/rational.hpp"
#include "permit_games/report.hpp"
#include "permit_games/scenario.hpp"

namespace permit_games {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

struct CommandFlags {
  // cores: pessimistic, optimistic, resource-minus, resource-plus or all.
  std::string game = "all";
  // trade: initial permits and money target (defaults come from the
  // pipeline), and an optional fixed permit price.
  std::optional<RationalVector> permits;
  std::optional<RationalVector> target;
  std::optional<Rational> price;
};

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

// demands, game, cores, resource-games, pipeline, mechanism, trade,
// reproduce-paper.
const std::vector<std::string>& command_names();

// Runs one analysis. Exit code 1 marks a negative verdict (a requested
// core is empty, the pipeline finds no stable allocation, a mechanism
// counterexample, an infeasible trade, a reproduction mismatch); 2 marks
// an unknown command or invalid input. reproduce-paper ignores `scenario`
// and uses its embedded economy.
CommandResult run_command(const std::string& command, const Scenario& scenario,
                          const CommandFlags& flags = {});

}  // namespace permit_games

#endif  // PERMIT_GAMES_COMMANDS_HPP
