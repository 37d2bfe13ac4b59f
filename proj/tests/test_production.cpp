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
#include "permit_games/production.hpp"
#include "permit_games/scenario.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace permit_games;

namespace {

const LppSituation& example3() {
  static const LppSituation s = example3_scenario().situation;
  return s;
}

// value(S; z) by vertex enumeration over the production polytope.
Rational oracle_value(const LppSituation& s, Coalition coalition, const Rational& z) {
  const std::size_t g = s.num_goods();
  const std::size_t q = s.num_resources();
  lp::LinearProgram program(g);
  program.objective = s.prices;
  for (std::size_t t = 0; t < q; ++t) {
    Rational held = 0;
    for (std::size_t i : coalition.members()) held += s.endowments[t][i];
    program.add_constraint(s.technology[t], lp::Sense::kLessEqual, held);
  }
  program.add_constraint(s.technology[q], lp::Sense::kLessEqual, z);
  pgtest::VertexOracleResult oracle = pgtest::vertex_enumeration(program);
  REQUIRE(oracle.feasible);
  return oracle.optimum - s.tax * z;
}

}  // namespace

TEST_CASE("coalition values of the three-firm economy") {
  const LppSituation& s = example3();
  CHECK(coalition_value(s, Coalition::of({0, 1, 2}), 50) == 2300);
  CHECK(coalition_value(s, Coalition::of({0}), make_rational(50, 3)) == make_rational(2000, 3));
  CHECK(coalition_value(s, Coalition::of({0, 2}), 30) == 1380);
  for (Coalition c : all_coalitions(3)) CHECK(coalition_value(s, c, 0) == 0);
  CHECK_THROWS_AS(coalition_value(s, Coalition::of({0}), -1), PreconditionError);
}

TEST_CASE("optimal demands of the three-firm economy") {
  const LppSituation& s = example3();
  CHECK(optimal_demand(s, Coalition::of({0})) == 20);
  CHECK(optimal_demand(s, Coalition::of({1})) == 20);
  CHECK(optimal_demand(s, Coalition::of({2})) == 25);
  CHECK(optimal_demand(s, Coalition::of({0, 1})) == 40);
  CHECK(optimal_demand(s, Coalition::of({0, 2})) == 46);
  CHECK(optimal_demand(s, Coalition::of({1, 2})) == 45);
  CHECK(optimal_demand(s, Coalition::grand(3)) == 66);

  RationalVector demands = all_demands(s);
  REQUIRE(demands.size() == 8);
  CHECK(demands[0] == 0);
  for (Coalition c : all_coalitions(3)) CHECK(demands[c.mask()] == optimal_demand(s, c));
}

TEST_CASE("firm without endowment") {
  LppSituation s = example3();
  for (auto& row : s.endowments) row.push_back(0);
  CHECK(condition_violations(s).empty());
  CHECK(optimal_demand(s, Coalition::singleton(3)) == 0);
  CHECK(coalition_value(s, Coalition::singleton(3), 10) == -140);
  CHECK(optimal_demand(s, Coalition::of({0, 3})) == 20);
}

TEST_CASE("coalition values agree with vertex enumeration") {
  pgtest::Rng rng(606);
  for (int trial = 0; trial < 120; ++trial) {
    auto n = static_cast<std::size_t>(rng.integer(1, 3));
    LppSituation s = pgtest::random_situation(rng, n, static_cast<std::size_t>(rng.integer(1, 3)),
                                              static_cast<std::size_t>(rng.integer(1, 3)));
    for (Coalition c : all_coalitions(n)) {
      Rational z = rng.rational(0, 40);
      CAPTURE(trial);
      CHECK(coalition_value(s, c, z) == oracle_value(s, c, z));
    }
  }
}

TEST_CASE("demand is the least maximizer and the slope beyond it is -c") {
  pgtest::Rng rng(707);
  for (int trial = 0; trial < 120; ++trial) {
    auto n = static_cast<std::size_t>(rng.integer(1, 3));
    LppSituation s = pgtest::random_situation(rng, n, static_cast<std::size_t>(rng.integer(1, 3)),
                                              static_cast<std::size_t>(rng.integer(1, 3)));
    for (Coalition c : all_coalitions(n)) {
      Rational d = optimal_demand(s, c);
      Rational peak = coalition_value(s, c, d);
      CAPTURE(trial);
      Rational saturation = revenue_curve(s, c).back().permits;
      CHECK(saturation >= d);
      for (int k = 0; k < 4; ++k) {
        Rational t = rng.rational(0, 20);
        Rational beyond = coalition_value(s, c, d + t);
        CHECK(beyond <= peak);
        CHECK(beyond >= peak - s.tax * t);
        CHECK(coalition_value(s, c, saturation + t) ==
              coalition_value(s, c, saturation) - s.tax * t);
      }
      if (sgn(d) > 0) {
        // Strictly below the demand the value is strictly smaller.
        CHECK(coalition_value(s, c, d * make_rational(99, 100)) < peak);
        Rational lo = d * rng.rational(0, 1);
        Rational hi = lo + (d - lo) * rng.rational(0, 1);
        CHECK(coalition_value(s, c, lo) <= coalition_value(s, c, hi));
      }
    }
  }
}

TEST_CASE("exact slope -c beyond the demand in the three-firm economy") {
  const LppSituation& s = example3();
  for (Coalition c : all_coalitions(3)) {
    Rational d = optimal_demand(s, c);
    CHECK(revenue_curve(s, c).back().permits == d);
    for (long t : {1L, 7L, 30L}) {
      CHECK(coalition_value(s, c, d + t) == coalition_value(s, c, d) - s.tax * t);
    }
  }
}

TEST_CASE("marginal revenue between zero and c past the demand") {
  // One resource unit; good 1 needs 1 permit and sells at 100, good 2
  // needs 10 permits and sells at 101. Revenue keeps rising by 1/9 per
  // permit up to z = 10, below the tax of 10.
  LppSituation s;
  s.technology = {{1, 1}, {1, 10}};
  s.endowments = {{1}};
  s.prices = {100, 101};
  s.tax = 10;
  s.cap = 1;
  REQUIRE(condition_violations(s).empty());
  Coalition firm = Coalition::singleton(0);
  CHECK(optimal_demand(s, firm) == 1);
  CHECK(coalition_value(s, firm, 1) == 90);
  CHECK(coalition_value(s, firm, 10) == 1);
  CHECK(coalition_value(s, firm, 4) == 90 + make_rational(1, 3) - 30);
  CHECK(revenue_curve(s, firm).back().permits == 10);
}

TEST_CASE("values are concave in permits and monotone in resources") {
  pgtest::Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    auto n = static_cast<std::size_t>(rng.integer(2, 3));
    LppSituation s = pgtest::random_situation(rng, n, static_cast<std::size_t>(rng.integer(1, 3)),
                                              static_cast<std::size_t>(rng.integer(1, 3)));
    for (Coalition c : all_coalitions(n)) {
      Rational z1 = rng.rational(0, 50);
      Rational z2 = rng.rational(0, 50);
      Rational alpha = make_rational(rng.integer(1, 9), 10);
      Rational mid = alpha * z1 + (1 - alpha) * z2;
      CAPTURE(trial);
      CHECK(coalition_value(s, c, mid) >=
            alpha * coalition_value(s, c, z1) + (1 - alpha) * coalition_value(s, c, z2));
      for (Coalition t : all_coalitions(n)) {
        if (c.is_subset_of(t)) CHECK(coalition_value(s, t, z1) >= coalition_value(s, c, z1));
      }
    }
  }
}

TEST_CASE("demands are not superadditive in general") {
  // Randomized search for disjoint S, T with d_{S u T} < d_S + d_T.
  pgtest::Rng rng(4040);
  bool found = false;
  for (int trial = 0; trial < 400 && !found; ++trial) {
    LppSituation s = pgtest::random_situation(rng, 2, 2, 2);
    Rational joint = optimal_demand(s, Coalition::grand(2));
    Rational apart = optimal_demand(s, Coalition::singleton(0)) +
                     optimal_demand(s, Coalition::singleton(1));
    if (joint < apart) found = true;
  }
  CHECK(found);
}

TEST_CASE("revenue curve is consistent with coalition values") {
  const LppSituation& s = example3();
  for (Coalition c : all_coalitions(3)) {
    std::vector<RevenuePoint> curve = revenue_curve(s, c);
    REQUIRE(!curve.empty());
    CHECK(curve.front().permits == 0);
    CHECK(curve.back().permits >= optimal_demand(s, c));
    for (const RevenuePoint& point : curve) {
      CHECK(coalition_value(s, c, point.permits) == point.revenue - s.tax * point.permits);
    }
  }
}
