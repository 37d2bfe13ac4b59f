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

#include <set>

#include "doctest.h"
#include "permit_games/errors.hpp"
#include "permit_games/partition_games.hpp"
#include "permit_games/scenario.hpp"
#include "support/generators.hpp"

using namespace permit_games;

namespace {

const LppSituation& example3() {
  static const LppSituation s = example3_scenario().situation;
  return s;
}

std::size_t index_of(const PartitionFunctionGame& game, const std::string& text) {
  for (std::size_t p = 0; p < game.partitions().size(); ++p) {
    if (game.partitions()[p].to_string() == text) return p;
  }
  FAIL("no partition " << text);
  return 0;
}

Coalition c(std::initializer_list<std::size_t> members) { return Coalition::of(members); }

}  // namespace

TEST_CASE("partition counts follow the Bell numbers") {
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(5).size() == 52);
  CHECK(bell_number(10) == 115975);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Partition> all = enumerate_partitions(n);
    CHECK(all.size() == bell_number(n));
    std::set<std::string> distinct;
    for (const Partition& p : all) {
      check_partition(p, n);
      distinct.insert(p.to_string());
    }
    CHECK(distinct.size() == all.size());
    CHECK(all.front().blocks.size() == n);
    CHECK(all.back().blocks.size() == 1);
  }
  CHECK_THROWS_AS(enumerate_partitions(11), SizeLimitError);
  CHECK_THROWS_AS(enumerate_partitions(4, 3), SizeLimitError);
}

TEST_CASE("three-firm partitions in canonical order") {
  std::vector<Partition> all = enumerate_partitions(3);
  CHECK(all[0].to_string() == "{{1},{2},{3}}");
  CHECK(all[1].to_string() == "{{1},{2,3}}");
  CHECK(all[2].to_string() == "{{1,3},{2}}");
  CHECK(all[3].to_string() == "{{1,2},{3}}");
  CHECK(all[4].to_string() == "{{1,2,3}}");
  CHECK_THROWS_AS(check_partition(Partition{{c({0}), c({0, 1}), c({2})}}, 3), StructuralError);
  CHECK_THROWS_AS(check_partition(Partition{{c({0}), c({1})}}, 3), StructuralError);
}

TEST_CASE("CEA partition function game of the three-firm economy") {
  PartitionFunctionGame game = build_game(example3(), Rule::kConstrainedEqualAwards);
  const std::size_t p1 = index_of(game, "{{1},{2},{3}}");
  const std::size_t p2 = index_of(game, "{{1,2},{3}}");
  const std::size_t p3 = index_of(game, "{{1,3},{2}}");
  const std::size_t p4 = index_of(game, "{{1},{2,3}}");
  const std::size_t p5 = index_of(game, "{{1,2,3}}");
  CHECK(p5 == game.grand_partition());

  CHECK(game.value(c({0}), p1) == make_rational(2000, 3));
  CHECK(game.value(c({1}), p1) == make_rational(2300, 3));
  CHECK(game.value(c({2}), p1) == make_rational(2300, 3));
  CHECK(game.value(c({0, 1}), p2) == 1150);
  CHECK(game.value(c({2}), p2) == 1150);
  CHECK(game.value(c({0, 2}), p3) == 1380);
  CHECK(game.value(c({1}), p3) == 920);
  CHECK(game.value(c({0}), p4) == 720);
  CHECK(game.value(c({1, 2}), p4) == 1380);
  CHECK(game.value(c({0, 1, 2}), p5) == 2300);
  CHECK(game.grand_value() == 2300);

  CHECK(game.share(c({0}), p1) == make_rational(50, 3));
  CHECK(game.share(c({0, 2}), p3) == 30);
  CHECK(game.share(c({1}), p3) == 20);

  // Externalities: firm 1 alone is worth more when 2 and 3 merge.
  CHECK(game.value(c({0}), p1) != game.value(c({0}), p4));
  CHECK(game.partitions_containing(c({0})).size() == 2);
  CHECK_THROWS(game.cell(c({0, 1}), p1));
}

TEST_CASE("every cell value is the coalition value at its share") {
  for (Rule rule : kAllRules) {
    PartitionFunctionGame game = build_game(example3(), rule);
    for (std::size_t p = 0; p < game.partitions().size(); ++p) {
      for (const GameCell& cell : game.cells(p)) {
        CHECK(cell.value == coalition_value(example3(), cell.block, cell.share));
      }
    }
  }
}

TEST_CASE("pessimistic and optimistic CEA games") {
  PartitionFunctionGame game = build_game(example3(), Rule::kConstrainedEqualAwards);
  CharacteristicGame lo = pessimistic_game(game);
  CharacteristicGame hi = optimistic_game(game);
  CHECK(lo.value(c({0})) == make_rational(2000, 3));
  CHECK(lo.value(c({1})) == make_rational(2300, 3));
  CHECK(lo.value(c({2})) == make_rational(2300, 3));
  CHECK(lo.value(c({0, 1})) == 1150);
  CHECK(lo.value(c({0, 2})) == 1380);
  CHECK(lo.value(c({1, 2})) == 1380);
  CHECK(lo.grand_value() == 2300);
  CHECK(hi.value(c({0})) == 720);
  CHECK(hi.value(c({1})) == 920);
  CHECK(hi.value(c({2})) == 1150);
  CHECK(hi.grand_value() == 2300);
}

TEST_CASE("PROP game values are exact rationals") {
  PartitionFunctionGame game = build_game(example3(), Rule::kProportional);
  const std::size_t p3 = index_of(game, "{{1,3},{2}}");
  // Share 50 * 46/66 and value 46 per permit on that range.
  CHECK(game.share(c({0, 2}), p3) == make_rational(1150, 33));
  CHECK(game.value(c({0, 2}), p3) == make_rational(52900, 33));
  CharacteristicGame lo = pessimistic_game(game);
  CHECK(lo.value(c({1})) == make_rational(23000, 33));
  CHECK(lo.value(c({0, 2})) == make_rational(52900, 33));
}

TEST_CASE("resource games of the three-firm economy") {
  PartitionFunctionGame cea = build_game(example3(), Rule::kConstrainedEqualAwards);
  CharacteristicGame plus = resource_game(cea, Outlook::kOptimistic).game;
  CharacteristicGame minus = resource_game(cea, Outlook::kPessimistic).game;
  CHECK(plus.value(c({0})) == 20);
  CHECK(plus.value(c({1})) == 20);
  CHECK(plus.value(c({2})) == 25);
  CHECK(plus.value(c({0, 1})) == 25);
  CHECK(plus.value(c({0, 2})) == 30);
  CHECK(plus.value(c({1, 2})) == 30);
  CHECK(plus.grand_value() == 50);
  for (std::size_t i = 0; i < 3; ++i) CHECK(minus.value(Coalition::singleton(i)) == make_rational(50, 3));
  CHECK(minus.value(c({0, 1})) == 25);
  CHECK(minus.value(c({0, 2})) == 30);
  CHECK(minus.value(c({1, 2})) == 30);
  CHECK(minus.grand_value() == 50);

  ResourceGame prop = resource_game(build_game(example3(), Rule::kProportional), Outlook::kPessimistic);
  CHECK(prop.game.value(c({1})) == make_rational(500, 33));
  CHECK(prop.game.value(c({0, 2})) == make_rational(1150, 33));
  // PROP is manipulable here: the merged pair claims more than its parts.
  Rational apart = prop.game.value(c({0})) + prop.game.value(c({2}));
  CHECK(apart == make_rational(450, 13));
  CHECK(apart < prop.game.value(c({0, 2})));
  CHECK(to_decimal_string(prop.game.value(c({0, 2}))) == "34.85");
}

TEST_CASE("resource game witnesses attain the reported value") {
  for (Rule rule : kAllRules) {
    PartitionFunctionGame game = build_game(example3(), rule);
    for (Outlook outlook : {Outlook::kOptimistic, Outlook::kPessimistic}) {
      ResourceGame r = resource_game(game, outlook);
      CharacteristicGame v = outlook == Outlook::kOptimistic ? optimistic_game(game)
                                                             : pessimistic_game(game);
      for (Coalition s : all_coalitions(3)) {
        std::size_t w = r.witness[s.mask()];
        CHECK(game.share(s, w) == r.game.value(s));
        CHECK(game.value(s, w) == v.value(s));
      }
    }
  }
}

TEST_CASE("structural properties on random scarce situations") {
  pgtest::Rng rng(9090);
  for (int trial = 0; trial < 60; ++trial) {
    LppSituation s = pgtest::random_scarce_situation(rng);
    const std::size_t n = s.num_firms();
    for (Rule rule : kAllRules) {
      PartitionFunctionGame game = build_game(s, rule);
      CAPTURE(trial);
      CAPTURE(to_string(rule));
      CHECK(game.grand_value() == coalition_value(s, Coalition::grand(n), s.cap));
      for (std::size_t p = 0; p < game.partitions().size(); ++p) {
        Rational shares = 0;
        Rational demand = 0;
        Rational values = 0;
        for (const GameCell& cell : game.cells(p)) {
          shares += cell.share;
          demand += game.demand(cell.block);
          values += cell.value;
        }
        // Permit conservation and superadditivity of the grand coalition.
        CHECK(shares == std::min(s.cap, demand));
        CHECK(game.grand_value() >= values);
      }
      ResourceGame plus = resource_game(game, Outlook::kOptimistic);
      ResourceGame minus = resource_game(game, Outlook::kPessimistic);
      for (Coalition coalition : all_coalitions(n)) {
        CHECK(plus.game.value(coalition) >= minus.game.value(coalition));
      }
      CHECK(minus.game.grand_value() == std::min(s.cap, game.demand(Coalition::grand(n))));

      // A coalition guaranteed its full demand is indifferent to the partition.
      Rational individual = 0;
      for (std::size_t i = 0; i < n; ++i) individual += game.demand(Coalition::singleton(i));
      if (individual >= s.cap) {
        for (Coalition coalition : all_coalitions(n)) {
          if (minus.game.value(coalition) != game.demand(coalition)) continue;
          const auto& containing = game.partitions_containing(coalition);
          for (std::size_t p : containing) {
            CHECK(game.value(coalition, p) == game.value(coalition, containing.front()));
          }
        }
      }
    }
  }
}

TEST_CASE("abundant cap removes externalities") {
  pgtest::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    LppSituation s = pgtest::random_situation(rng, 3, 2, 2);
    Rational total = 0;
    for (Coalition coalition : all_coalitions(3)) total += optimal_demand(s, coalition);
    s.cap = total + 1;
    PartitionFunctionGame game = build_game(s, Rule::kProportional);
    for (Coalition coalition : all_coalitions(3)) {
      for (std::size_t p : game.partitions_containing(coalition)) {
        CHECK(game.share(coalition, p) == game.demand(coalition));
        CHECK(game.value(coalition, p) == coalition_value(s, coalition, game.demand(coalition)));
      }
    }
    CHECK(pessimistic_game(game) == optimistic_game(game));
  }
}
