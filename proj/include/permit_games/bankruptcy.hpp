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

#ifndef PERMIT_GAMES_BANKRUPTCY_HPP
#define PERMIT_GAMES_BANKRUPTCY_HPP

#include <array>
#include <string>
#include <string_view>

#include "permit_games/game.hpp"
#include "permit_games/rational.hpp"

namespace permit_games {

enum class Rule {
  kConstrainedEqualAwards,
  kConstrainedEqualLosses,
  kProportional,
  kTalmud,
};

inline constexpr std::array<Rule, 4> kAllRules = {
    Rule::kConstrainedEqualAwards, Rule::kConstrainedEqualLosses, Rule::kProportional,
    Rule::kTalmud};

// "CEA", "CEL", "PROP", "TAL".
std::string to_string(Rule rule);
// Case-insensitive inverse of to_string. Throws std::invalid_argument.
Rule parse_rule(std::string_view text);

// Estate to divide among claimants with nonnegative claims summing to at
// least the estate. Claimants may be single firms or blocks of a partition
// whose claims are not additive; the rules do not care.
struct BankruptcyProblem {
  Rational estate;
  RationalVector claims;

  std::size_t num_claimants() const { return claims.size(); }
};

// Throws PreconditionError unless estate >= 0, claims >= 0 and the claims
// cover the estate.
void check_problem(const BankruptcyProblem& problem);

// Division of the estate with 0 <= a_i <= d_i and sum a_i = E, exactly.
RationalVector apply_rule(Rule rule, const BankruptcyProblem& problem);

RationalVector constrained_equal_awards(const BankruptcyProblem& problem);
RationalVector constrained_equal_losses(const BankruptcyProblem& problem);
RationalVector proportional(const BankruptcyProblem& problem);
RationalVector talmud(const BankruptcyProblem& problem);

// v(S) = max(E - sum of claims outside S, 0).
CharacteristicGame bankruptcy_game(const BankruptcyProblem& problem);

}  // namespace permit_games

#endif  // PERMIT_GAMES_BANKRUPTCY_HPP
