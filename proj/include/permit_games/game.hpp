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

#ifndef PERMIT_GAMES_GAME_HPP
#define PERMIT_GAMES_GAME_HPP

#include <string>

#include "permit_games/coalition.hpp"
#include "permit_games/rational.hpp"

namespace permit_games {

// TU game in characteristic function form: a value for every nonempty
// coalition of n players. v(empty) = 0 is implicit.
class CharacteristicGame {
 public:
  CharacteristicGame() = default;
  explicit CharacteristicGame(std::size_t num_players, std::string name = {});

  std::size_t num_players() const { return num_players_; }
  const std::string& name() const { return name_; }

  const Rational& value(Coalition coalition) const;
  void set_value(Coalition coalition, Rational value);
  const Rational& grand_value() const { return value(Coalition::grand(num_players_)); }

  bool operator==(const CharacteristicGame& other) const {
    return num_players_ == other.num_players_ && values_ == other.values_;
  }

 private:
  void check(Coalition coalition) const;

  std::size_t num_players_ = 0;
  std::string name_;
  RationalVector values_;
};

}  // namespace permit_games

#endif  // PERMIT_GAMES_GAME_HPP
