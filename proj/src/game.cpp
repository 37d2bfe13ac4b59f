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

#include "permit_games/game.hpp"

#include "permit_games/errors.hpp"

namespace permit_games {

CharacteristicGame::CharacteristicGame(std::size_t num_players, std::string name)
    : num_players_(num_players), name_(std::move(name)) {
  if (num_players == 0 || num_players > kMaxPlayers) {
    throw SizeLimitError("player count must be in [1, " + std::to_string(kMaxPlayers) + "]");
  }
  values_.assign(std::size_t{1} << num_players, Rational(0));
}

void CharacteristicGame::check(Coalition coalition) const {
  if (coalition.empty() || !coalition.is_subset_of(Coalition::grand(num_players_))) {
    throw StructuralError("coalition " + coalition.to_string() + " is not a nonempty subset of " +
                          std::to_string(num_players_) + " players");
  }
}

const Rational& CharacteristicGame::value(Coalition coalition) const {
  check(coalition);
  return values_[coalition.mask()];
}

void CharacteristicGame::set_value(Coalition coalition, Rational value) {
  check(coalition);
  values_[coalition.mask()] = std::move(value);
}

}  // namespace permit_games
