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

#ifndef PERMIT_GAMES_PARTITION_GAMES_HPP
#define PERMIT_GAMES_PARTITION_GAMES_HPP

#include <optional>
#include <string>
#include <vector>

#include "permit_games/bankruptcy.hpp"
#include "permit_games/coalition.hpp"
#include "permit_games/game.hpp"
#include "permit_games/production.hpp"
#include "permit_games/rational.hpp"

namespace permit_games {

inline constexpr std::size_t kDefaultPartitionLimit = 10;

// Set partition of the firms. Blocks are pairwise disjoint, cover every
// firm, and are sorted by least member so equality is syntactic.
struct Partition {
  std::vector<Coalition> blocks;

  std::optional<std::size_t> block_index(Coalition coalition) const;
  bool contains(Coalition coalition) const { return block_index(coalition).has_value(); }
  std::string to_string() const;  // "{{1,3},{2}}"

  bool operator==(const Partition&) const = default;
};

// Throws StructuralError if the blocks are not a canonical partition of n firms.
void check_partition(const Partition& partition, std::size_t num_players);

// Bell(n) partitions, finest first ({{1},{2},...}) and the grand coalition
// last. Cached per n. Throws SizeLimitError when n > limit.
std::vector<Partition> enumerate_partitions(std::size_t num_players,
                                            std::size_t limit = kDefaultPartitionLimit);

// Bell numbers by the Bell triangle, for n <= 25.
unsigned long long bell_number(std::size_t n);

// f(S|P) and V^f(S|P) for one block of one partition.
struct GameCell {
  Coalition block;
  Rational share;
  Rational value;
};

// The partition function form game induced by announcing a bankruptcy rule
// to split the cap among the blocks of each partition. When a partition's
// block demands fit under the cap every block receives its demand.
class PartitionFunctionGame {
 public:
  PartitionFunctionGame(LppSituation situation, Rule rule, RationalVector demands,
                        std::vector<Partition> partitions,
                        std::vector<std::vector<GameCell>> cells);

  const LppSituation& situation() const { return situation_; }
  Rule rule() const { return rule_; }
  std::size_t num_players() const { return situation_.num_firms(); }

  // d_S by coalition mask.
  const Rational& demand(Coalition coalition) const { return demands_[coalition.mask()]; }
  const RationalVector& demands() const { return demands_; }

  const std::vector<Partition>& partitions() const { return partitions_; }
  // Cells of partition p, aligned with partitions()[p].blocks.
  const std::vector<GameCell>& cells(std::size_t p) const { return cells_[p]; }

  // Indices of the partitions in which the coalition is a block.
  const std::vector<std::size_t>& partitions_containing(Coalition coalition) const;

  const GameCell& cell(Coalition coalition, std::size_t p) const;
  const Rational& value(Coalition coalition, std::size_t p) const { return cell(coalition, p).value; }
  const Rational& share(Coalition coalition, std::size_t p) const { return cell(coalition, p).share; }

  // Index of the partition with the single block N.
  std::size_t grand_partition() const;
  // V^f(N|{N}).
  const Rational& grand_value() const;

 private:
  LppSituation situation_;
  Rule rule_;
  RationalVector demands_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<GameCell>> cells_;
  std::vector<std::vector<std::size_t>> containing_;
};

PartitionFunctionGame build_game(const LppSituation& situation, Rule rule,
                                 std::size_t partition_limit = kDefaultPartitionLimit);

// v^-(S) = min over partitions containing S of V^f(S|P).
CharacteristicGame pessimistic_game(const PartitionFunctionGame& game);
// v^+(S) = max over partitions containing S of V^f(S|P).
CharacteristicGame optimistic_game(const PartitionFunctionGame& game);

enum class Outlook { kOptimistic, kPessimistic };

// R^+ / R^-: among the partitions where S attains its best (optimistic) or
// worst (pessimistic) value, the least permit share S receives. The
// witness is the canonically first partition attaining that share.
struct ResourceGame {
  CharacteristicGame game;
  std::vector<std::size_t> witness;  // partition index by coalition mask
};

ResourceGame resource_game(const PartitionFunctionGame& game, Outlook outlook);

}  // namespace permit_games

#endif  // PERMIT_GAMES_PARTITION_GAMES_HPP
