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

#ifndef PERMIT_GAMES_PRODUCTION_HPP
#define PERMIT_GAMES_PRODUCTION_HPP

#include <string>
#include <vector>

#include "permit_games/coalition.hpp"
#include "permit_games/lp.hpp"
#include "permit_games/rational.hpp"

namespace permit_games {

// Linear production economy with an external capped, taxed resource
// (emission permits). All firms share one Leontief technology.
struct LppSituation {
  // (q+1) x g. Row t < q: units of resource t per unit of good j.
  // Last row: permits per unit of good j.
  RationalMatrix technology;
  // q x n. Column i is firm i's resource endowment.
  RationalMatrix endowments;
  // Market price of each good.
  RationalVector prices;
  // Tax per permit unit.
  Rational tax;
  // Cap on the total number of permits.
  Rational cap;

  std::size_t num_goods() const { return prices.size(); }
  std::size_t num_resources() const { return endowments.size(); }
  std::size_t num_firms() const { return endowments.empty() ? 0 : endowments.front().size(); }

  const RationalVector& permit_row() const { return technology.back(); }

  // b^S, the pooled resource endowment of a coalition.
  RationalVector resources_of(Coalition coalition) const;

  bool operator==(const LppSituation&) const = default;
};

// Dimension problems (throws StructuralError on the first one found).
void check_dimensions(const LppSituation& situation);

// Economic conditions the model requires: positive permit use for every
// good, one resource used by every good, every resource held by someone,
// positive tax and cap, and prices above the per-unit tax burden. Returns
// one human-readable message per violation; empty when valid.
std::vector<std::string> condition_violations(const LppSituation& situation);

// check_dimensions + condition_violations; throws PreconditionError citing
// the first violated condition.
void validate(const LppSituation& situation);

// Profit-maximizing production plan of a coalition for a fixed permit
// holding z: max p.x - c z s.t. resources(x) <= b^S, permits(x) <= z, x >= 0.
struct ProductionPlan {
  Rational profit;
  Rational revenue;
  RationalVector quantities;
  // Shadow prices of the q resource rows and the permit row.
  RationalVector shadow_prices;
};

ProductionPlan optimal_plan(const LppSituation& situation, Coalition coalition,
                            const Rational& permits);

// value(S; z). Throws PreconditionError when z < 0.
Rational coalition_value(const LppSituation& situation, Coalition coalition,
                         const Rational& permits);

// d_S: least z >= 0 at which value(S; z) reaches its maximum. Solved as a
// lexicographic pair of LPs: best profit with z free, then least z that
// still attains that profit.
Rational optimal_demand(const LppSituation& situation, Coalition coalition);

// d_S for every nonempty coalition, indexed by mask (entry 0 unused).
RationalVector all_demands(const LppSituation& situation);

// Gross revenue R(z) = max p.x over plans using at most z permits is
// concave and piecewise linear, constant beyond some saturation level.
// Returns its breakpoints (z, R(z)) in increasing z, starting at (0, 0) and
// ending at the least z where R reaches its maximum.
struct RevenuePoint {
  Rational permits;
  Rational revenue;
};
std::vector<RevenuePoint> revenue_curve(const LppSituation& situation, Coalition coalition);

// max p.x - c r s.t. A x <= (b^N; r), x >= 0: the grand coalition program
// whose optimal dual prices the Owen-style allocation.
lp::LinearProgram grand_coalition_program(const LppSituation& situation);

}  // namespace permit_games

#endif  // PERMIT_GAMES_PRODUCTION_HPP
