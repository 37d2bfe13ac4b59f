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

#ifndef PERMIT_GAMES_COALITION_HPP
#define PERMIT_GAMES_COALITION_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace permit_games {

// Hard ceiling on the firm count; coalition masks are 32-bit.
inline constexpr std::size_t kMaxPlayers = 20;

// Nonempty set of firms, stored as a bitmask over 0-based firm indices.
// Rendered 1-based, e.g. "{1,3}".
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  static Coalition singleton(std::size_t firm) { return Coalition(std::uint32_t{1} << firm); }
  static Coalition grand(std::size_t num_players) {
    return Coalition(num_players >= 32 ? ~std::uint32_t{0}
                                       : (std::uint32_t{1} << num_players) - 1);
  }
  static Coalition of(const std::vector<std::size_t>& members);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(std::size_t firm) const { return (mask_ >> firm) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr std::size_t least_member() const {
    return static_cast<std::size_t>(std::countr_zero(mask_));
  }
  constexpr bool is_subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<std::size_t> members() const;
  std::string to_string() const;

  constexpr Coalition operator|(Coalition other) const { return Coalition(mask_ | other.mask_); }
  constexpr Coalition operator&(Coalition other) const { return Coalition(mask_ & other.mask_); }
  constexpr auto operator<=>(const Coalition&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

// All nonempty coalitions of n players in increasing mask order.
std::vector<Coalition> all_coalitions(std::size_t num_players);

// Coalitions ordered by size, then lexicographically by sorted members:
// {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
std::vector<Coalition> coalitions_by_size(std::size_t num_players);

}  // namespace permit_games

#endif  // PERMIT_GAMES_COALITION_HPP
