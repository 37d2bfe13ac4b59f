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

#ifndef PERMIT_GAMES_STABILITY_HPP
#define PERMIT_GAMES_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "permit_games/bankruptcy.hpp"
#include "permit_games/coalition.hpp"
#include "permit_games/game.hpp"
#include "permit_games/partition_games.hpp"
#include "permit_games/production.hpp"
#include "permit_games/rational.hpp"

namespace permit_games {

// Result of testing one allocation against the core conditions.
struct CoreCheck {
  bool member = false;
  bool efficient = false;
  // First coalition, in increasing mask order, with x(S) < v(S).
  std::optional<Coalition> violated;
};

// Throws StructuralError when x is not indexed by the game's players.
CoreCheck in_core(const CharacteristicGame& game, const RationalVector& allocation);

struct BalancedWeight {
  Coalition coalition;
  Rational weight;
};

// Core nonemptiness decided by LP feasibility over all 2^n - 1 coalition
// constraints. The witness is the vertex the simplex lands on: a core
// element, not a canonical one. When the core is empty the certificate is a
// balanced family (weights summing to one for every player) whose weighted
// coalition values exceed v(N).
struct CoreVerdict {
  bool nonempty = false;
  std::optional<RationalVector> witness;
  std::vector<BalancedWeight> certificate;
};

CoreVerdict core_nonempty(const CharacteristicGame& game);

// "720 + 920 + 1150 > 2300" style rendering of an emptiness certificate.
std::string describe_certificate(const CharacteristicGame& game,
                                 const std::vector<BalancedWeight>& certificate,
                                 int precision = 2);

// Money allocation x_i = sum_t b_t^i y_t + h_i (y_perm - c) built from an
// optimal dual y of the grand coalition program. Requires d_N > r, h >= 0
// and sum h = r. The dual used is reported since degenerate programs admit
// several.
struct OwenAllocation {
  RationalVector payoff;
  RationalVector dual;
};

OwenAllocation owen_allocation(const LppSituation& situation, const RationalVector& permits);

enum class Regime {
  // d_N > r and sum_i d_i > r: the cap is rationed among individual firms.
  kScarce,
  // d_N > r but sum_i d_i <= r: (N, r, d) is not a bankruptcy problem.
  kSubadditiveDemands,
  // d_N <= r: the grand coalition is fully served.
  kAbundant,
};

std::string to_string(Regime regime);

struct PipelineReport {
  Rule rule = Rule::kConstrainedEqualAwards;
  Regime regime = Regime::kScarce;
  RationalVector individual_demands;
  Rational grand_demand;
  Rational cap;

  // h: the rule applied to (N, r, (d_i)), or the demands when they fit.
  RationalVector permits;
  CoreCheck permits_in_resource_minus;
  CoreCheck permits_in_resource_plus;

  // Present once h is in C(R^-) under scarcity.
  std::optional<OwenAllocation> money;
  std::optional<CoreCheck> money_in_pessimistic;
  std::optional<CoreCheck> money_in_optimistic;
  // y_perm > c on the dual used.
  std::optional<bool> dual_above_tax;

  // Pairwise condition d_i + d_j >= 2r/n for all i != j, with rule CEA.
  bool pairwise_condition = false;
  // sum_{i in S} h_i >= f(S | {S} + singletons) for every coalition.
  bool merge_condition = false;
  std::optional<Coalition> merge_condition_violated;

  // A verified pessimistic-core money allocation was produced.
  bool stable = false;
};

PipelineReport stable_pipeline(const PartitionFunctionGame& game);
PipelineReport stable_pipeline(const LppSituation& situation, Rule rule,
                               std::size_t partition_limit = kDefaultPartitionLimit);

// Index of the partition {S} + singletons of the remaining firms.
std::size_t merged_partition_index(const PartitionFunctionGame& game, Coalition coalition);

struct LedgerRow {
  std::size_t firm = 0;
  Rational initial_permits;
  Rational final_permits;
  Rational revenue;
  Rational tax_paid;
  // Positive when the firm sells permits.
  Rational permits_sold;
  Rational trade_cash;
  Rational net;
};

struct TradeLedger {
  bool feasible = false;
  std::string reason;
  // Absent when no trade is needed.
  std::optional<Rational> price;
  std::vector<LedgerRow> rows;
  Rational manager_revenue;
};

// Accounting that takes firms from the permit allocation h to the money
// allocation `target` through production at final permit holdings, the tax
// c h_i paid to the manager, and permit trades at one uniform price. When
// no price is given, candidate prices are those at which some firm's trade
// line passes through a breakpoint of its revenue curve; the highest
// candidate admitting a ledger is used. Requires h >= 0 and sum h = r.
TradeLedger trade_ledger(const LppSituation& situation, const RationalVector& permits,
                         const RationalVector& target,
                         std::optional<Rational> price = std::nullopt);

}  // namespace permit_games

#endif  // PERMIT_GAMES_STABILITY_HPP
