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

#include "permit_games/partition_games.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "permit_games/errors.hpp"

namespace permit_games {

std::optional<std::size_t> Partition::block_index(Coalition coalition) const {
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k] == coalition) return k;
  }
  return std::nullopt;
}

std::string Partition::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k > 0) out += ",";
    out += blocks[k].to_string();
  }
  return out + "}";
}

void check_partition(const Partition& partition, std::size_t num_players) {
  std::uint32_t seen = 0;
  for (std::size_t k = 0; k < partition.blocks.size(); ++k) {
    Coalition block = partition.blocks[k];
    if (block.empty()) throw StructuralError("partition has an empty block");
    if ((seen & block.mask()) != 0) {
      throw StructuralError("partition blocks overlap at " + block.to_string());
    }
    if (k > 0 && partition.blocks[k - 1].least_member() > block.least_member()) {
      throw StructuralError("partition blocks are not sorted by least member");
    }
    seen |= block.mask();
  }
  if (seen != Coalition::grand(num_players).mask()) {
    throw StructuralError("partition " + partition.to_string() + " does not cover " +
                          std::to_string(num_players) + " firms");
  }
}

unsigned long long bell_number(std::size_t n) {
  if (n > 25) throw SizeLimitError("Bell numbers above n = 25 overflow 64 bits");
  std::vector<unsigned long long> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (unsigned long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

namespace {

void extend(std::size_t i, std::size_t used, std::vector<std::size_t>& label,
            std::vector<Partition>& out) {
  const std::size_t n = label.size();
  if (i == n) {
    Partition partition;
    partition.blocks.assign(used, Coalition());
    for (std::size_t k = 0; k < n; ++k) {
      partition.blocks[label[k]] = partition.blocks[label[k]] | Coalition::singleton(k);
    }
    out.push_back(std::move(partition));
    return;
  }
  for (std::size_t l = 0; l <= used && l < n; ++l) {
    label[i] = l;
    extend(i + 1, std::max(used, l + 1), label, out);
  }
}

// Restricted growth strings in lexicographic order, reversed so the finest
// partition comes first.
std::vector<Partition> generate_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> label(n, 0);
  extend(1, 1, label, out);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t num_players, std::size_t limit) {
  if (num_players == 0) throw StructuralError("partitions need at least one player");
  if (num_players > limit || num_players > kMaxPlayers) {
    throw SizeLimitError(std::to_string(num_players) + " players exceed the partition limit of " +
                         std::to_string(std::min(limit, kMaxPlayers)) + " (Bell(" +
                         std::to_string(num_players) + ") partitions)");
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(num_players);
  if (it == cache.end()) it = cache.emplace(num_players, generate_partitions(num_players)).first;
  return it->second;
}

PartitionFunctionGame::PartitionFunctionGame(LppSituation situation, Rule rule,
                                             RationalVector demands,
                                             std::vector<Partition> partitions,
                                             std::vector<std::vector<GameCell>> cells)
    : situation_(std::move(situation)),
      rule_(rule),
      demands_(std::move(demands)),
      partitions_(std::move(partitions)),
      cells_(std::move(cells)),
      containing_(std::size_t{1} << situation_.num_firms()) {
  if (cells_.size() != partitions_.size()) {
    throw StructuralError("one cell list per partition is required");
  }
  for (std::size_t p = 0; p < partitions_.size(); ++p) {
    if (cells_[p].size() != partitions_[p].blocks.size()) {
      throw StructuralError("cells of partition " + partitions_[p].to_string() +
                            " do not match its blocks");
    }
    for (Coalition block : partitions_[p].blocks) containing_[block.mask()].push_back(p);
  }
}

const std::vector<std::size_t>& PartitionFunctionGame::partitions_containing(
    Coalition coalition) const {
  if (coalition.empty() || coalition.mask() >= containing_.size()) {
    throw StructuralError("coalition " + coalition.to_string() + " is out of range");
  }
  return containing_[coalition.mask()];
}

const GameCell& PartitionFunctionGame::cell(Coalition coalition, std::size_t p) const {
  if (p >= partitions_.size()) throw StructuralError("partition index out of range");
  auto k = partitions_[p].block_index(coalition);
  if (!k) {
    throw StructuralError(coalition.to_string() + " is not a block of " +
                          partitions_[p].to_string());
  }
  return cells_[p][*k];
}

std::size_t PartitionFunctionGame::grand_partition() const {
  return partitions_containing(Coalition::grand(num_players())).front();
}

const Rational& PartitionFunctionGame::grand_value() const {
  return value(Coalition::grand(num_players()), grand_partition());
}

namespace {

// value(S; z) recurs across partitions (same block, same share).
class ValueCache {
 public:
  explicit ValueCache(const LppSituation& situation) : situation_(situation) {}

  const Rational& operator()(Coalition coalition, const Rational& permits) {
    auto& entries = entries_[coalition.mask()];
    for (const auto& [z, v] : entries) {
      if (z == permits) return v;
    }
    entries.emplace_back(permits, coalition_value(situation_, coalition, permits));
    return entries.back().second;
  }

 private:
  const LppSituation& situation_;
  std::map<std::uint32_t, std::vector<std::pair<Rational, Rational>>> entries_;
};

}  // namespace

PartitionFunctionGame build_game(const LppSituation& situation, Rule rule,
                                 std::size_t partition_limit) {
  validate(situation);
  const std::size_t n = situation.num_firms();
  std::vector<Partition> partitions = enumerate_partitions(n, partition_limit);
  RationalVector demands = all_demands(situation);
  ValueCache values(situation);

  std::vector<std::vector<GameCell>> cells;
  cells.reserve(partitions.size());
  for (const Partition& partition : partitions) {
    BankruptcyProblem problem{situation.cap, {}};
    for (Coalition block : partition.blocks) problem.claims.push_back(demands[block.mask()]);
    RationalVector shares = sum(problem.claims) <= situation.cap ? problem.claims
                                                                 : apply_rule(rule, problem);
    std::vector<GameCell> row;
    row.reserve(partition.blocks.size());
    for (std::size_t k = 0; k < partition.blocks.size(); ++k) {
      Coalition block = partition.blocks[k];
      row.push_back(GameCell{block, shares[k], values(block, shares[k])});
    }
    cells.push_back(std::move(row));
  }
  return PartitionFunctionGame(situation, rule, std::move(demands), std::move(partitions),
                               std::move(cells));
}

namespace {

CharacteristicGame extreme_game(const PartitionFunctionGame& game, bool maximize,
                                std::string name) {
  CharacteristicGame out(game.num_players(), std::move(name));
  for (Coalition coalition : all_coalitions(game.num_players())) {
    const auto& containing = game.partitions_containing(coalition);
    Rational best = game.value(coalition, containing.front());
    for (std::size_t p : containing) {
      const Rational& v = game.value(coalition, p);
      if (maximize ? v > best : v < best) best = v;
    }
    out.set_value(coalition, std::move(best));
  }
  return out;
}

}  // namespace

CharacteristicGame pessimistic_game(const PartitionFunctionGame& game) {
  return extreme_game(game, /*maximize=*/false, "pessimistic");
}

CharacteristicGame optimistic_game(const PartitionFunctionGame& game) {
  return extreme_game(game, /*maximize=*/true, "optimistic");
}

ResourceGame resource_game(const PartitionFunctionGame& game, Outlook outlook) {
  const bool optimistic = outlook == Outlook::kOptimistic;
  CharacteristicGame extreme = optimistic ? optimistic_game(game) : pessimistic_game(game);
  ResourceGame out{CharacteristicGame(game.num_players(),
                                      optimistic ? "resource-plus" : "resource-minus"),
                   std::vector<std::size_t>(std::size_t{1} << game.num_players(), 0)};
  for (Coalition coalition : all_coalitions(game.num_players())) {
    const Rational& target = extreme.value(coalition);
    std::optional<std::size_t> witness;
    for (std::size_t p : game.partitions_containing(coalition)) {
      if (game.value(coalition, p) != target) continue;
      if (!witness || game.share(coalition, p) < game.share(coalition, *witness)) witness = p;
    }
    out.game.set_value(coalition, game.share(coalition, *witness));
    out.witness[coalition.mask()] = *witness;
  }
  return out;
}

}  // namespace permit_games
