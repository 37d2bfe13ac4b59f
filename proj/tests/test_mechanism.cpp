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
#include "permit_games/mechanism.hpp"
#include "permit_games/scenario.hpp"
#include "support/generators.hpp"

using namespace permit_games;

namespace {

const LppSituation& example3() {
  static const LppSituation s = example3_scenario().situation;
  return s;
}

RationalVector rv(std::initializer_list<Rational> values) { return RationalVector(values); }

RationalVector example_levels() {
  return rv({0, 10, make_rational(50, 3), 20, 25, 30, 46, 50, 66});
}

}  // namespace

TEST_CASE("truthful payoffs in the three-firm economy") {
  MechanismConfig cfg = make_config(example3(), Rule::kConstrainedEqualAwards, example_levels());
  RationalVector truth = true_demands(example3(), cfg.claimants);
  CHECK(truth == rv({20, 20, 25}));
  CHECK(mechanism_payoff(example3(), cfg, truth, 0) == make_rational(2000, 3));
  CHECK(mechanism_payoff(example3(), cfg, truth, 1) == make_rational(2300, 3));
  CHECK(mechanism_payoff(example3(), cfg, truth, 2) == make_rational(2300, 3));

  // Firm 1 over-reports 30: the water level stays at 50/3.
  RationalVector over = rv({30, 20, 25});
  CHECK(mechanism_allocation(Rule::kConstrainedEqualAwards, 50, over)[0] == make_rational(50, 3));
  CHECK(mechanism_payoff(example3(), cfg, over, 0) <= mechanism_payoff(example3(), cfg, truth, 0));

  CHECK(mechanism_payoff(example3(), cfg, rv({0, 20, 25}), 0) == 0);
  CHECK(mechanism_allocation(Rule::kProportional, 50, rv({10, 20, 5})) == rv({10, 20, 5}));
}

TEST_CASE("grid configuration includes true demands") {
  MechanismConfig cfg = make_config(example3(), Rule::kConstrainedEqualAwards, rv({30, 0, 30}));
  REQUIRE(cfg.grid.size() == 3);
  CHECK(cfg.grid[0] == rv({0, 20, 30}));
  CHECK(cfg.grid[2] == rv({0, 25, 30}));
  CHECK(cfg.claimants.blocks.size() == 3);
}

TEST_CASE("CEA is dominant-strategy truthful on the example grid") {
  MechanismConfig cfg = make_config(example3(), Rule::kConstrainedEqualAwards, example_levels());
  DominanceReport report = dominance_check(example3(), cfg);
  CHECK(report.truthful_dominant);
  CHECK(!report.counterexample);
  CHECK(report.cells_checked > 0);
  CHECK(equilibrium_check(example3(), cfg, rv({20, 20, 25})).equilibrium);
}

TEST_CASE("PROP rewards over-reporting on the example grid") {
  MechanismConfig cfg = make_config(example3(), Rule::kProportional, example_levels());
  DominanceReport report = dominance_check(example3(), cfg);
  CHECK(!report.truthful_dominant);
  REQUIRE(report.counterexample);
  const Deviation& dev = *report.counterexample;
  CHECK(dev.deviating_payoff > dev.baseline_payoff);
  RationalVector truth = true_demands(example3(), cfg.claimants);
  CHECK(dev.profile[dev.claimant] == truth[dev.claimant]);
  CHECK(dev.deviating_report > truth[dev.claimant]);
  // Replay the counterexample from scratch.
  RationalVector deviated = dev.profile;
  deviated[dev.claimant] = dev.deviating_report;
  CHECK(mechanism_payoff(example3(), cfg, dev.profile, dev.claimant) == dev.baseline_payoff);
  CHECK(mechanism_payoff(example3(), cfg, deviated, dev.claimant) == dev.deviating_payoff);

  EquilibriumReport eq = equilibrium_check(example3(), cfg, truth);
  CHECK(!eq.equilibrium);
  REQUIRE(eq.deviation);
  CHECK(eq.deviation->deviating_payoff > eq.deviation->baseline_payoff);
}

TEST_CASE("a silent firm gains by reporting its demand") {
  MechanismConfig cfg = make_config(example3(), Rule::kConstrainedEqualAwards, example_levels());
  EquilibriumReport eq = equilibrium_check(example3(), cfg, rv({0, 20, 25}));
  CHECK(!eq.equilibrium);
  REQUIRE(eq.deviation);
  CHECK(eq.deviation->claimant == 0);
}

TEST_CASE("single claimant is trivially truthful") {
  LppSituation s = example3();
  for (Rule rule : kAllRules) {
    MechanismConfig cfg = make_config(s, rule, example_levels(),
                                      Partition{{Coalition::grand(3)}});
    CHECK(true_demands(s, cfg.claimants) == rv({66}));
    CHECK(dominance_check(s, cfg).truthful_dominant);
  }
}

TEST_CASE("CEA over a fixed coalition structure") {
  Partition blocks{{Coalition::of({0, 2}), Coalition::of({1})}};
  MechanismConfig cfg =
      make_config(example3(), Rule::kConstrainedEqualAwards, example_levels(), blocks);
  CHECK(true_demands(example3(), blocks) == rv({46, 20}));
  CHECK(mechanism_payoff(example3(), cfg, rv({46, 20}), 0) == 1380);
  CHECK(dominance_check(example3(), cfg).truthful_dominant);
}

TEST_CASE("grid product limit") {
  MechanismConfig cfg = make_config(example3(), Rule::kConstrainedEqualAwards, example_levels());
  cfg.profile_limit = 10;
  CHECK_THROWS_AS(dominance_check(example3(), cfg), SizeLimitError);
  cfg = make_config(example3(), Rule::kConstrainedEqualAwards, example_levels());
  cfg.grid[1] = rv({0, 30});
  CHECK_THROWS_AS(dominance_check(example3(), cfg), PreconditionError);
}

TEST_CASE("CEA is truthful on random grids") {
  pgtest::Rng rng(1818);
  for (int trial = 0; trial < 40; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng, 4, 2, 2);
    const std::size_t n = s.num_firms();
    const long extra = n == 4 ? 4 : 7;
    RationalVector levels;
    for (long k = 0, count = rng.integer(2, extra); k < count; ++k) {
      levels.push_back(s.cap * rng.rational(0, 3) / 2);
    }
    MechanismConfig cfg = make_config(s, Rule::kConstrainedEqualAwards, levels);
    for (const auto& grid : cfg.grid) REQUIRE(grid.size() <= 8);
    DominanceReport report = dominance_check(s, cfg);
    CAPTURE(trial);
    CHECK(report.truthful_dominant);
  }
}

TEST_CASE("CEA over- and under-reporting") {
  pgtest::Rng rng(2929);
  int scarce = 0;
  for (int trial = 0; trial < 80; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng);
    const std::size_t n = s.num_firms();
    MechanismConfig cfg = make_config(s, Rule::kConstrainedEqualAwards, {});
    RationalVector truth = true_demands(s, cfg.claimants);
    RationalVector base = mechanism_allocation(Rule::kConstrainedEqualAwards, s.cap, truth);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational truthful_payoff = mechanism_payoff(s, cfg, truth, i);
      CAPTURE(trial);
      if (base[i] < truth[i]) {
        ++scarce;
        RationalVector over = truth;
        over[i] = truth[i] + rng.rational(0, 30) + make_rational(1, 7);
        CHECK(mechanism_allocation(Rule::kConstrainedEqualAwards, s.cap, over)[i] == base[i]);
      }
      if (sgn(base[i]) > 0) {
        RationalVector under = truth;
        under[i] = base[i] * rng.rational(0, 5) / 6;
        CHECK(mechanism_allocation(Rule::kConstrainedEqualAwards, s.cap, under)[i] < base[i]);
        CHECK(mechanism_payoff(s, cfg, under, i) <= truthful_payoff);
      }
    }
  }
  CHECK(scarce >= 20);
}

TEST_CASE("payoff never exceeds the value at the true demand") {
  pgtest::Rng rng(3030);
  for (int trial = 0; trial < 60; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng);
    const std::size_t n = s.num_firms();
    for (Rule rule : kAllRules) {
      MechanismConfig cfg = make_config(s, rule, {});
      RationalVector truth = true_demands(s, cfg.claimants);
      RationalVector reports(n);
      for (auto& x : reports) x = s.cap * rng.rational(0, 2);
      for (std::size_t i = 0; i < n; ++i) {
        Coalition firm = Coalition::singleton(i);
        CHECK(mechanism_payoff(s, cfg, reports, i) <= coalition_value(s, firm, truth[i]));
      }
    }
  }
}
