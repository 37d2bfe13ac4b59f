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

#include "doctest.h"
#include "permit_games/errors.hpp"
#include "permit_games/stability.hpp"
#include "permit_games/scenario.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace permit_games;

namespace {

const LppSituation& example3() {
  static const LppSituation s = example3_scenario().situation;
  return s;
}

const PartitionFunctionGame& example3_game(Rule rule) {
  static const PartitionFunctionGame cea = build_game(example3(), Rule::kConstrainedEqualAwards);
  static const PartitionFunctionGame prop = build_game(example3(), Rule::kProportional);
  REQUIRE((rule == Rule::kConstrainedEqualAwards || rule == Rule::kProportional));
  return rule == Rule::kProportional ? prop : cea;
}

RationalVector rv(std::initializer_list<Rational> values) { return RationalVector(values); }

const Rational kThird = make_rational(50, 3);

// Random nonnegative split of `total` into n parts.
RationalVector random_split(pgtest::Rng& rng, std::size_t n, const Rational& total) {
  RationalVector weights(n);
  for (auto& w : weights) w = rng.rational(0, 6);
  weights[rng.index(n)] += 1;
  Rational all = sum(weights);
  for (auto& w : weights) w = w * total / all;
  return weights;
}

}  // namespace

TEST_CASE("core membership in the three-firm games") {
  CharacteristicGame lo = pessimistic_game(example3_game(Rule::kConstrainedEqualAwards));
  CoreCheck check = in_core(lo, rv({700, 800, 800}));
  CHECK(check.member);
  CHECK(check.efficient);
  CHECK(!check.violated);

  CharacteristicGame minus = resource_game(example3_game(Rule::kConstrainedEqualAwards),
                                           Outlook::kPessimistic).game;
  CHECK(in_core(minus, rv({kThird, kThird, kThird})).member);

  RationalVector singles = rv({lo.value(Coalition::of({0})), lo.value(Coalition::of({1})),
                               lo.value(Coalition::of({2}))});
  CoreCheck breach = in_core(lo, singles);
  CHECK(!breach.member);
  CHECK(!breach.efficient);

  CoreCheck blocked = in_core(lo, rv({600, 900, 800}));
  CHECK(blocked.efficient);
  REQUIRE(blocked.violated);
  CHECK(*blocked.violated == Coalition::of({0}));

  CHECK_THROWS_AS(in_core(lo, rv({1, 2})), StructuralError);
}

TEST_CASE("core emptiness in the three-firm games") {
  CharacteristicGame hi = optimistic_game(example3_game(Rule::kConstrainedEqualAwards));
  CoreVerdict empty = core_nonempty(hi);
  CHECK(!empty.nonempty);
  CHECK(!empty.witness);
  CHECK(describe_certificate(hi, empty.certificate) == "720.00 + 920.00 + 1150.00 > 2300.00");
  CHECK(describe_certificate(hi, empty.certificate, 0) == "720 + 920 + 1150 > 2300");

  CharacteristicGame lo = pessimistic_game(example3_game(Rule::kConstrainedEqualAwards));
  CoreVerdict full = core_nonempty(lo);
  REQUIRE(full.nonempty);
  REQUIRE(full.witness);
  CHECK(in_core(lo, *full.witness).member);

  CharacteristicGame prop_minus =
      resource_game(example3_game(Rule::kProportional), Outlook::kPessimistic).game;
  CHECK(!core_nonempty(prop_minus).nonempty);
  CHECK(!core_nonempty(pessimistic_game(example3_game(Rule::kProportional))).nonempty);
}

TEST_CASE("additive games have the weight vector as their only core point") {
  pgtest::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto n = static_cast<std::size_t>(rng.integer(1, 5));
    RationalVector w(n);
    for (auto& x : w) x = rng.rational(-10, 10);
    CharacteristicGame v(n);
    for (Coalition s : all_coalitions(n)) {
      Rational total = 0;
      for (std::size_t i : s.members()) total += w[i];
      v.set_value(s, total);
    }
    CoreVerdict verdict = core_nonempty(v);
    REQUIRE(verdict.nonempty);
    CHECK(*verdict.witness == w);
  }
}

TEST_CASE("core decider agrees with balanced collections for three players") {
  pgtest::Rng rng(314);
  int empty = 0;
  for (int trial = 0; trial < 300; ++trial) {
    CharacteristicGame v(3);
    for (Coalition s : all_coalitions(3)) v.set_value(s, rng.rational(0, 10) * Rational(s.size()));
    CoreVerdict verdict = core_nonempty(v);
    CAPTURE(trial);
    CHECK(verdict.nonempty == pgtest::oracle_core_nonempty_3(v));
    if (verdict.nonempty) {
      CHECK(in_core(v, *verdict.witness).member);
    } else {
      ++empty;
      // The certificate is a balanced family whose weighted worth beats v(N).
      RationalVector cover(3, Rational(0));
      Rational worth = 0;
      for (const BalancedWeight& b : verdict.certificate) {
        CHECK(sgn(b.weight) > 0);
        for (std::size_t i : b.coalition.members()) cover[i] += b.weight;
        worth += b.weight * v.value(b.coalition);
      }
      CHECK(cover == RationalVector(3, Rational(1)));
      CHECK(worth > v.grand_value());
    }
  }
  CHECK(empty >= 20);
}

TEST_CASE("Owen allocation of the three-firm economy") {
  OwenAllocation owen = owen_allocation(example3(), rv({kThird, kThird, kThird}));
  CHECK(owen.dual == rv({0, 0, 60}));
  const Rational third = make_rational(2300, 3);
  CHECK(owen.payoff == rv({third, third, third}));
  CharacteristicGame lo = pessimistic_game(example3_game(Rule::kConstrainedEqualAwards));
  CHECK(in_core(lo, owen.payoff).member);

  OwenAllocation skewed = owen_allocation(example3(), rv({20, 15, 15}));
  CHECK(sum(skewed.payoff) == 2300);
  CHECK(skewed.payoff[0] == 20 * (60 - 14));

  LppSituation abundant = example3();
  abundant.cap = 66;
  CHECK_THROWS_AS(owen_allocation(abundant, rv({20, 20, 26})), PreconditionError);
  CHECK_THROWS_AS(owen_allocation(example3(), rv({20, 20, 20})), PreconditionError);
  CHECK_THROWS_AS(owen_allocation(example3(), rv({60, -5, -5})), PreconditionError);
}

TEST_CASE("Owen allocation of a single firm is the firm's value") {
  pgtest::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    LppSituation s = pgtest::random_situation(rng, 1, 2, 2);
    Rational d = optimal_demand(s, Coalition::grand(1));
    if (sgn(d) == 0) continue;
    s.cap = d / 2;
    OwenAllocation owen = owen_allocation(s, rv({s.cap}));
    CHECK(owen.payoff == rv({coalition_value(s, Coalition::grand(1), s.cap)}));
  }
}

TEST_CASE("Owen allocation is efficient for every permit split") {
  pgtest::Rng rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng);
    const std::size_t n = s.num_firms();
    RationalVector h = random_split(rng, n, s.cap);
    OwenAllocation owen = owen_allocation(s, h);
    CAPTURE(trial);
    CHECK(sum(owen.payoff) == coalition_value(s, Coalition::grand(n), s.cap));
    CHECK(owen.dual.back() > s.tax);
  }
}

TEST_CASE("pipeline on the three-firm economy") {
  PipelineReport cea = stable_pipeline(example3(), Rule::kConstrainedEqualAwards);
  CHECK(cea.regime == Regime::kScarce);
  CHECK(cea.individual_demands == rv({20, 20, 25}));
  CHECK(cea.grand_demand == 66);
  CHECK(cea.permits == rv({kThird, kThird, kThird}));
  CHECK(cea.permits_in_resource_minus.member);
  REQUIRE(cea.money);
  const Rational third = make_rational(2300, 3);
  CHECK(cea.money->payoff == rv({third, third, third}));
  REQUIRE(cea.money_in_pessimistic);
  CHECK(cea.money_in_pessimistic->member);
  CHECK(cea.dual_above_tax == true);
  CHECK(cea.pairwise_condition);
  CHECK(cea.merge_condition);
  CHECK(cea.stable);

  PipelineReport prop = stable_pipeline(example3(), Rule::kProportional);
  CHECK(prop.permits == rv({make_rational(200, 13), make_rational(200, 13), make_rational(250, 13)}));
  CHECK(!prop.permits_in_resource_minus.member);
  CHECK(!prop.money);
  CHECK(!prop.stable);
  CHECK(!prop.pairwise_condition);

  LppSituation abundant = example3();
  abundant.cap = 100;
  PipelineReport wide = stable_pipeline(abundant, Rule::kConstrainedEqualAwards);
  CHECK(wide.regime == Regime::kAbundant);
  CHECK(wide.permits == rv({20, 20, 25}));
  CHECK(!wide.money);
  CHECK(!wide.stable);
}

TEST_CASE("core witnesses of the resource games yield core money allocations") {
  pgtest::Rng rng(1234);
  int plus_witnesses = 0;
  int minus_witnesses = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng);
    for (Rule rule : kAllRules) {
      PartitionFunctionGame game = build_game(s, rule);
      for (Outlook outlook : {Outlook::kPessimistic, Outlook::kOptimistic}) {
        CoreVerdict verdict = core_nonempty(resource_game(game, outlook).game);
        if (!verdict.nonempty) continue;
        (outlook == Outlook::kPessimistic ? minus_witnesses : plus_witnesses)++;
        OwenAllocation owen = owen_allocation(s, *verdict.witness);
        CharacteristicGame v = outlook == Outlook::kPessimistic ? pessimistic_game(game)
                                                                : optimistic_game(game);
        CAPTURE(trial);
        CAPTURE(to_string(rule));
        CHECK(in_core(v, owen.payoff).member);
      }
    }
  }
  CHECK(minus_witnesses >= 50);
  CHECK(plus_witnesses >= 10);
}

TEST_CASE("pairwise demand condition under CEA") {
  pgtest::Rng rng(1313);
  int covered = 0;
  for (int trial = 0; trial < 400 && covered < 40; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng);
    const std::size_t n = s.num_firms();
    PartitionFunctionGame game = build_game(s, Rule::kConstrainedEqualAwards);
    PipelineReport report = stable_pipeline(game);
    if (!report.pairwise_condition || report.regime != Regime::kScarce) continue;
    ++covered;
    CAPTURE(trial);
    CharacteristicGame lo = pessimistic_game(game);
    CHECK(core_nonempty(lo).nonempty);
    CHECK(report.stable);
    REQUIRE(report.money);
    CHECK(in_core(lo, report.money->payoff).member);
    // Merging never gains a coalition more than its members get apart.
    for (Coalition coalition : all_coalitions(n)) {
      Rational apart = 0;
      for (std::size_t i : coalition.members()) apart += report.permits[i];
      CHECK(apart >= game.share(coalition, merged_partition_index(game, coalition)));
    }
  }
  CHECK(covered >= 20);
}

TEST_CASE("merge inequality implies the rule's permits are in the resource core") {
  pgtest::Rng rng(4321);
  int covered = 0;
  for (int trial = 0; trial < 80; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng);
    for (Rule rule : kAllRules) {
      PipelineReport report = stable_pipeline(s, rule);
      if (report.regime != Regime::kScarce) continue;
      REQUIRE(report.dual_above_tax.has_value() == report.permits_in_resource_minus.member);
      if (report.dual_above_tax) CHECK(*report.dual_above_tax);
      if (!report.merge_condition) continue;
      ++covered;
      CAPTURE(trial);
      CHECK(report.permits_in_resource_minus.member);
      CHECK(report.stable);
    }
  }
  CHECK(covered >= 30);
}

TEST_CASE("trade ledger reproduces the worked trading example") {
  RationalVector h = rv({kThird, kThird, kThird});
  for (std::optional<Rational> price : {std::optional<Rational>(50), std::optional<Rational>()}) {
    TradeLedger ledger = trade_ledger(example3(), h, rv({700, 800, 800}), price);
    REQUIRE(ledger.feasible);
    REQUIRE(ledger.price);
    CHECK(*ledger.price == 50);
    CHECK(ledger.manager_revenue == 700);
    REQUIRE(ledger.rows.size() == 3);
    CHECK(ledger.rows[0].revenue == 600);
    CHECK(ledger.rows[0].permits_sold == make_rational(20, 3));
    CHECK(ledger.rows[0].final_permits == 10);
    CHECK(ledger.rows[1].revenue == 1200);
    CHECK(ledger.rows[1].permits_sold == -make_rational(10, 3));
    CHECK(ledger.rows[2].final_permits == 20);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ledger.rows[i].tax_paid == make_rational(700, 3));
    CHECK(ledger.rows[0].net == 700);
    CHECK(ledger.rows[1].net == 800);
    CHECK(ledger.rows[2].net == 800);
  }
  TradeLedger off = trade_ledger(example3(), h, rv({700, 800, 801}));
  CHECK(!off.feasible);
  CHECK(!off.reason.empty());
  CHECK_THROWS_AS(trade_ledger(example3(), rv({10, 10, 10}), rv({700, 800, 800})),
                  PreconditionError);
}

TEST_CASE("identical firms need no trade at their autarky profits") {
  LppSituation s;
  s.technology = {{1, 2}, {2, 1}, {1, 1}};
  s.endowments = {{30, 30}, {30, 30}};
  s.prices = {40, 50};
  s.tax = 10;
  s.cap = 10;
  REQUIRE(condition_violations(s).empty());
  const Rational each = coalition_value(s, Coalition::singleton(0), 5);
  TradeLedger ledger = trade_ledger(s, rv({5, 5}), rv({each, each}));
  REQUIRE(ledger.feasible);
  CHECK(!ledger.price);
  for (const LedgerRow& row : ledger.rows) {
    CHECK(row.permits_sold == 0);
    CHECK(row.net == each);
  }
}

TEST_CASE("trade ledgers for random efficient targets") {
  pgtest::Rng rng(99);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    RationalVector h = random_split(rng, 3, 50);
    RationalVector target = random_split(rng, 3, 2300);
    TradeLedger ledger = trade_ledger(example3(), h, target);
    CAPTURE(trial);
    if (!ledger.feasible) {
      ++infeasible;
      CHECK(!ledger.reason.empty());
      continue;
    }
    ++feasible;
    Rational sold = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      const LedgerRow& row = ledger.rows[i];
      CHECK(row.net == target[i]);
      CHECK(row.net == row.revenue - row.tax_paid + row.trade_cash);
      CHECK(row.final_permits == row.initial_permits - row.permits_sold);
      CHECK(sgn(row.final_permits) >= 0);
      CHECK(row.revenue <= optimal_plan(example3(), Coalition::singleton(i), row.final_permits).revenue);
      CHECK(row.trade_cash == *ledger.price * row.permits_sold);
      sold += row.permits_sold;
    }
    CHECK(sold == 0);
  }
  CHECK(feasible >= 10);
  CHECK(infeasible >= 1);
}
