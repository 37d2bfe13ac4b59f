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

#ifndef PERMIT_GAMES_MECHANISM_HPP
#define PERMIT_GAMES_MECHANISM_HPP

#include <optional>
#include <vector>

#include "permit_games/bankruptcy.hpp"
#include "permit_games/partition_games.hpp"
#include "permit_games/production.hpp"
#include "permit_games/rational.hpp"

namespace permit_games {

inline constexpr std::size_t kDefaultProfileLimit = 2'000'000;

// Direct mechanism: claimants report permit needs, the cap is divided by
// the announced rule (or reports are served in full when they fit), and
// each claimant produces with its true resources and the permits received.
struct MechanismConfig {
  Rule rule = Rule::kConstrainedEqualAwards;
  // Claimant units: blocks of a fixed partition, singletons by default.
  Partition claimants;
  // Finite report levels per claimant. Must contain the true demand.
  std::vector<RationalVector> grid;
  // Ceiling on evaluated (claimant, profile, deviation) cells.
  std::size_t profile_limit = kDefaultProfileLimit;
};

// Singleton claimants, every claimant sharing `levels` plus its own true
// demand (levels are sorted and deduplicated).
MechanismConfig make_config(const LppSituation& situation, Rule rule, RationalVector levels,
                            std::optional<Partition> claimants = std::nullopt);

// d_{S_k} for each claimant block.
RationalVector true_demands(const LppSituation& situation, const Partition& claimants);

// A(reports): reports in full when their total fits the cap, else the rule.
RationalVector mechanism_allocation(Rule rule, const Rational& cap, const RationalVector& reports);

// value(S_k; A_k(reports)) with claimant k's true resources.
Rational mechanism_payoff(const LppSituation& situation, const MechanismConfig& config,
                          const RationalVector& reports, std::size_t claimant);

struct Deviation {
  std::size_t claimant = 0;
  // Profile the deviation is measured against. In a dominance check the
  // claimant's own entry is its true demand.
  RationalVector profile;
  Rational deviating_report;
  Rational baseline_payoff;
  Rational deviating_payoff;
};

struct DominanceReport {
  bool truthful_dominant = true;
  std::optional<Deviation> counterexample;
  std::size_t cells_checked = 0;
};

// Exhaustive check that truth-telling is weakly dominant on the grid: for
// every claimant, every opponent profile and every own report, the
// truthful payoff is at least the deviating one. Reports the first
// counterexample in claimant, then profile (odometer), then report order.
DominanceReport dominance_check(const LppSituation& situation, const MechanismConfig& config);

struct EquilibriumReport {
  bool equilibrium = true;
  std::optional<Deviation> deviation;
};

// No claimant has a grid report strictly improving on its payoff under
// `profile`, with the others' reports held fixed.
EquilibriumReport equilibrium_check(const LppSituation& situation, const MechanismConfig& config,
                                    const RationalVector& profile);

}  // namespace permit_games

#endif  // PERMIT_GAMES_MECHANISM_HPP
