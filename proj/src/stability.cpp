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

#include "permit_games/stability.hpp"

#include <algorithm>
#include <functional>

#include "permit_games/errors.hpp"
#include "permit_games/lp.hpp"

namespace permit_games {

CoreCheck in_core(const CharacteristicGame& game, const RationalVector& allocation) {
  const std::size_t n = game.num_players();
  if (allocation.size() != n) {
    throw StructuralError("allocation has " + std::to_string(allocation.size()) +
                          " entries for a game of " + std::to_string(n) + " players");
  }
  CoreCheck check;
  check.efficient = sum(allocation) == game.grand_value();
  for (Coalition coalition : all_coalitions(n)) {
    Rational total = 0;
    for (std::size_t i : coalition.members()) total += allocation[i];
    if (total < game.value(coalition)) {
      check.violated = coalition;
      break;
    }
  }
  check.member = check.efficient && !check.violated;
  return check;
}

CoreVerdict core_nonempty(const CharacteristicGame& game) {
  const std::size_t n = game.num_players();
  const Coalition grand = Coalition::grand(n);

  lp::LinearProgram program(n);
  for (std::size_t i = 0; i < n; ++i) program.set_bounds(i, lp::Bounds{std::nullopt, std::nullopt});
  std::vector<Coalition> rows;
  for (Coalition coalition : all_coalitions(n)) {
    if (coalition == grand) continue;
    RationalVector row(n, Rational(0));
    for (std::size_t i : coalition.members()) row[i] = 1;
    program.add_constraint(std::move(row), lp::Sense::kGreaterEqual, game.value(coalition));
    rows.push_back(coalition);
  }
  program.add_constraint(RationalVector(n, Rational(1)), lp::Sense::kEqual, game.grand_value());

  lp::LpSolution solution = lp::solve(program);
  CoreVerdict verdict;
  if (solution.status == lp::Status::kOptimal) {
    verdict.nonempty = true;
    verdict.witness = std::move(solution.primal);
    return verdict;
  }
  // Farkas ray: y_S <= 0 on coalition rows, y_N > 0 on the efficiency row.
  const Rational& scale = solution.dual.back();
  if (sgn(scale) <= 0) {
    throw std::logic_error("core LP returned an invalid infeasibility certificate");
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (sgn(solution.dual[k]) == 0) continue;
    verdict.certificate.push_back(BalancedWeight{rows[k], Rational(-solution.dual[k] / scale)});
  }
  // Balanced family whose weighted worth beats v(N); checked, not trusted.
  RationalVector cover(n, Rational(0));
  Rational worth = 0;
  for (const auto& [coalition, weight] : verdict.certificate) {
    if (sgn(weight) < 0) throw std::logic_error("negative balancing weight in core certificate");
    for (std::size_t i : coalition.members()) cover[i] += weight;
    worth += weight * game.value(coalition);
  }
  if (std::any_of(cover.begin(), cover.end(), [](const Rational& c) { return c != 1; }) ||
      !(worth > game.grand_value())) {
    throw std::logic_error("core LP returned an invalid infeasibility certificate");
  }
  return verdict;
}

std::string describe_certificate(const CharacteristicGame& game,
                                 const std::vector<BalancedWeight>& certificate, int precision) {
  std::string lhs;
  for (const auto& [coalition, weight] : certificate) {
    if (!lhs.empty()) lhs += " + ";
    if (weight != 1) lhs += to_fraction_string(weight) + "*";
    lhs += to_decimal_string(game.value(coalition), precision);
  }
  return lhs + " > " + to_decimal_string(game.grand_value(), precision);
}

OwenAllocation owen_allocation(const LppSituation& situation, const RationalVector& permits) {
  validate(situation);
  const std::size_t n = situation.num_firms();
  const std::size_t q = situation.num_resources();
  if (permits.size() != n) {
    throw StructuralError("permit allocation has " + std::to_string(permits.size()) +
                          " entries for " + std::to_string(n) + " firms");
  }
  for (const auto& h : permits) {
    if (sgn(h) < 0) throw PreconditionError("permit allocations must be nonnegative");
  }
  if (sum(permits) != situation.cap) {
    throw PreconditionError("permit allocation sums to " + to_fraction_string(sum(permits)) +
                            ", expected the cap " + to_fraction_string(situation.cap));
  }
  Rational grand_demand = optimal_demand(situation, Coalition::grand(n));
  if (!(grand_demand > situation.cap)) {
    throw PreconditionError("grand coalition demand " + to_fraction_string(grand_demand) +
                            " does not exceed the cap " + to_fraction_string(situation.cap));
  }

  lp::LpSolution solution = lp::solve(grand_coalition_program(situation));
  OwenAllocation out;
  out.dual = solution.dual;
  const Rational margin = out.dual[q] - situation.tax;
  out.payoff.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = permits[i] * margin;
    for (std::size_t t = 0; t < q; ++t) x += situation.endowments[t][i] * out.dual[t];
    out.payoff[i] = std::move(x);
  }
  return out;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kScarce:
      return "scarce";
    case Regime::kSubadditiveDemands:
      return "subadditive-demands";
    case Regime::kAbundant:
      return "abundant";
  }
  return "?";
}

std::size_t merged_partition_index(const PartitionFunctionGame& game, Coalition coalition) {
  const std::size_t wanted_blocks = game.num_players() - coalition.size() + 1;
  for (std::size_t p : game.partitions_containing(coalition)) {
    if (game.partitions()[p].blocks.size() == wanted_blocks) return p;
  }
  throw std::logic_error("partition " + coalition.to_string() + " + singletons not enumerated");
}

PipelineReport stable_pipeline(const PartitionFunctionGame& game) {
  const LppSituation& situation = game.situation();
  const std::size_t n = game.num_players();

  PipelineReport report;
  report.rule = game.rule();
  report.cap = situation.cap;
  report.grand_demand = game.demand(Coalition::grand(n));
  for (std::size_t i = 0; i < n; ++i) {
    report.individual_demands.push_back(game.demand(Coalition::singleton(i)));
  }
  const Rational individual_total = sum(report.individual_demands);

  if (!(report.grand_demand > situation.cap)) {
    report.regime = Regime::kAbundant;
  } else if (!(individual_total > situation.cap)) {
    report.regime = Regime::kSubadditiveDemands;
  } else {
    report.regime = Regime::kScarce;
  }

  if (individual_total <= situation.cap) {
    report.permits = report.individual_demands;
  } else {
    report.permits = apply_rule(game.rule(), BankruptcyProblem{situation.cap,
                                                               report.individual_demands});
  }

  ResourceGame minus = resource_game(game, Outlook::kPessimistic);
  ResourceGame plus = resource_game(game, Outlook::kOptimistic);
  report.permits_in_resource_minus = in_core(minus.game, report.permits);
  report.permits_in_resource_plus = in_core(plus.game, report.permits);

  report.pairwise_condition = game.rule() == Rule::kConstrainedEqualAwards;
  const Rational pair_floor = 2 * situation.cap / Rational(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (report.individual_demands[i] + report.individual_demands[j] < pair_floor) {
        report.pairwise_condition = false;
      }
    }
  }

  report.merge_condition = true;
  for (Coalition coalition : all_coalitions(n)) {
    Rational held = 0;
    for (std::size_t i : coalition.members()) held += report.permits[i];
    if (held < game.share(coalition, merged_partition_index(game, coalition))) {
      report.merge_condition = false;
      report.merge_condition_violated = coalition;
      break;
    }
  }

  if (report.regime == Regime::kScarce && report.permits_in_resource_minus.member) {
    OwenAllocation money = owen_allocation(situation, report.permits);
    report.dual_above_tax = money.dual.back() > situation.tax;
    report.money_in_pessimistic = in_core(pessimistic_game(game), money.payoff);
    if (report.permits_in_resource_plus.member) {
      report.money_in_optimistic = in_core(optimistic_game(game), money.payoff);
    }
    report.stable = report.money_in_pessimistic->member;
    report.money = std::move(money);
  }
  return report;
}

PipelineReport stable_pipeline(const LppSituation& situation, Rule rule,
                               std::size_t partition_limit) {
  return stable_pipeline(build_game(situation, rule, partition_limit));
}

namespace {

// Feasibility LP for a fixed price t over per-firm plans x^i and final
// holdings z_i:
//   resources(x^i) <= b^i,  permits(x^i) <= z_i,  sum z_i = sum h_i,
//   p.x^i - t z_i = target_i + (c - t) h_i.
std::optional<TradeLedger> ledger_at_price(const LppSituation& s, const RationalVector& permits,
                                           const RationalVector& target, const Rational& price) {
  const std::size_t n = s.num_firms();
  const std::size_t g = s.num_goods();
  const std::size_t q = s.num_resources();
  const std::size_t block = g + 1;

  lp::LinearProgram program(n * block);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = i * block;
    for (std::size_t t = 0; t < q; ++t) {
      RationalVector row(n * block, Rational(0));
      for (std::size_t j = 0; j < g; ++j) row[base + j] = s.technology[t][j];
      program.add_constraint(std::move(row), lp::Sense::kLessEqual, s.endowments[t][i]);
    }
    RationalVector permit_row(n * block, Rational(0));
    for (std::size_t j = 0; j < g; ++j) permit_row[base + j] = s.permit_row()[j];
    permit_row[base + g] = -1;
    program.add_constraint(std::move(permit_row), lp::Sense::kLessEqual, 0);

    RationalVector money_row(n * block, Rational(0));
    for (std::size_t j = 0; j < g; ++j) money_row[base + j] = s.prices[j];
    money_row[base + g] = -price;
    program.add_constraint(std::move(money_row), lp::Sense::kEqual,
                           target[i] + (s.tax - price) * permits[i]);
  }
  RationalVector holdings(n * block, Rational(0));
  for (std::size_t i = 0; i < n; ++i) holdings[i * block + g] = 1;
  program.add_constraint(std::move(holdings), lp::Sense::kEqual, sum(permits));

  lp::LpSolution solution = lp::solve(program);
  if (solution.status != lp::Status::kOptimal) return std::nullopt;

  TradeLedger ledger;
  ledger.feasible = true;
  ledger.price = price;
  for (std::size_t i = 0; i < n; ++i) {
    LedgerRow row;
    row.firm = i;
    row.initial_permits = permits[i];
    row.final_permits = solution.primal[i * block + g];
    row.revenue = 0;
    for (std::size_t j = 0; j < g; ++j) row.revenue += s.prices[j] * solution.primal[i * block + j];
    row.tax_paid = s.tax * permits[i];
    row.permits_sold = row.initial_permits - row.final_permits;
    row.trade_cash = price * row.permits_sold;
    row.net = row.revenue - row.tax_paid + row.trade_cash;
    ledger.rows.push_back(std::move(row));
  }
  return ledger;
}

}  // namespace

TradeLedger trade_ledger(const LppSituation& situation, const RationalVector& permits,
                         const RationalVector& target, std::optional<Rational> price) {
  validate(situation);
  const std::size_t n = situation.num_firms();
  if (permits.size() != n || target.size() != n) {
    throw StructuralError("permit and target allocations need one entry per firm");
  }
  for (const auto& h : permits) {
    if (sgn(h) < 0) throw PreconditionError("permit allocations must be nonnegative");
  }
  if (sum(permits) != situation.cap) {
    throw PreconditionError("permit allocation sums to " + to_fraction_string(sum(permits)) +
                            ", expected the cap " + to_fraction_string(situation.cap));
  }
  if (price && sgn(*price) < 0) throw PreconditionError("permit price must be nonnegative");

  TradeLedger ledger;
  ledger.manager_revenue = situation.tax * situation.cap;
  const Rational efficient_total = coalition_value(situation, Coalition::grand(n), situation.cap);
  if (sum(target) != efficient_total) {
    ledger.reason = "target sums to " + to_fraction_string(sum(target)) +
                    ", but the grand coalition earns " + to_fraction_string(efficient_total);
    return ledger;
  }

  // No-trade fixed point: every firm already earns its target in autarky.
  std::vector<LedgerRow> autarky;
  bool no_trade = true;
  for (std::size_t i = 0; i < n; ++i) {
    ProductionPlan plan = optimal_plan(situation, Coalition::singleton(i), permits[i]);
    LedgerRow row{i,         permits[i], permits[i],          plan.revenue,
                  situation.tax * permits[i], Rational(0), Rational(0), plan.profit};
    no_trade = no_trade && row.net == target[i];
    autarky.push_back(std::move(row));
  }
  if (no_trade) {
    ledger.feasible = true;
    ledger.rows = std::move(autarky);
    return ledger;
  }

  std::vector<Rational> candidates;
  if (price) {
    candidates.push_back(*price);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational anchor = target[i] + situation.tax * permits[i];
      for (const auto& point : revenue_curve(situation, Coalition::singleton(i))) {
        if (point.permits == permits[i]) continue;
        Rational t = (point.revenue - anchor) / (point.permits - permits[i]);
        if (sgn(t) >= 0) candidates.push_back(std::move(t));
      }
    }
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }

  for (const auto& t : candidates) {
    if (auto found = ledger_at_price(situation, permits, target, t)) {
      found->manager_revenue = ledger.manager_revenue;
      return *found;
    }
  }
  ledger.reason = price ? "no ledger reproduces the target at price " + to_fraction_string(*price)
                        : "no uniform permit price reproduces the target";
  return ledger;
}

}  // namespace permit_games
