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

#include "permit_games/coalition.hpp"

#include <algorithm>

#include "permit_games/errors.hpp"

namespace permit_games {

Coalition Coalition::of(const std::vector<std::size_t>& members) {
  std::uint32_t mask = 0;
  for (std::size_t m : members) {
    if (m >= kMaxPlayers) throw StructuralError("firm index " + std::to_string(m) + " out of range");
    mask |= std::uint32_t{1} << m;
  }
  return Coalition(mask);
}

std::vector<std::size_t> Coalition::members() const {
  std::vector<std::size_t> out;
  for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::string Coalition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t m : members()) {
    if (!first) out += ",";
    out += std::to_string(m + 1);
    first = false;
  }
  return out + "}";
}

std::vector<Coalition> all_coalitions(std::size_t num_players) {
  if (num_players > kMaxPlayers) {
    throw SizeLimitError("at most " + std::to_string(kMaxPlayers) + " players supported");
  }
  std::vector<Coalition> out;
  std::uint32_t count = std::uint32_t{1} << num_players;
  out.reserve(count - 1);
  for (std::uint32_t mask = 1; mask < count; ++mask) out.emplace_back(mask);
  return out;
}

std::vector<Coalition> coalitions_by_size(std::size_t num_players) {
  auto out = all_coalitions(num_players);
  std::sort(out.begin(), out.end(), [](Coalition a, Coalition b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

}  // namespace permit_games
