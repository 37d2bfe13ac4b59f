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

#include "permit_games/reproduce.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "permit_games/partition_games.hpp"
#include "permit_games/report.hpp"
#include "permit_games/scenario.hpp"
#include "permit_games/stability.hpp"

namespace permit_games {

namespace {

// 1-based member list to a coalition.
Coalition firms(std::initializer_list<std::size_t> members) {
  std::vector<std::size_t> zero_based;
  for (std::size_t m : members) zero_based.push_back(m - 1);
  return Coalition::of(zero_based);
}

struct CellFigure {
  Coalition block;
  const char* share;
  const char* value;
};

struct PartitionFigures {
  std::vector<Coalition> blocks;
  std::vector<CellFigure> cells;
};

Partition make_partition(std::vector<Coalition> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](Coalition a, Coalition b) {
    return a.least_member() < b.least_member();
  });
  return Partition{blocks};
}

std::size_t find_partition(const PartitionFunctionGame& game, const Partition& partition) {
  const auto& all = game.partitions();
  for (std::size_t p = 0; p < all.size(); ++p) {
    if (all[p] == partition) return p;
  }
  throw std::logic_error("partition " + partition.to_string() + " not enumerated");
}

Rational rounded(const Rational& value) { return parse_rational(to_decimal_string(value, 2)); }

class Checker {
 public:
  void decimal(const std::string& example, const std::string& item, const std::string& expected,
               const Rational& actual, std::string note = {}) {
    std::string shown = to_decimal_string(actual, 2);
    push(example, item, expected, shown, shown == expected, std::move(note));
  }

  void exact(const std::string& example, const std::string& item, const Rational& expected,
             const Rational& actual) {
    push(example, item, to_fraction_string(expected), to_fraction_string(actual),
         expected == actual, {});
  }

  void text(const std::string& example, const std::string& item, const std::string& expected,
            const std::string& actual) {
    push(example, item, expected, actual, expected == actual, {});
  }

  std::vector<ReproductionCheck> take() { return std::move(checks_); }

 private:
  void push(const std::string& example, const std::string& item, const std::string& expected,
            const std::string& actual, bool ok, std::string note) {
    if (ok) note.clear();
    checks_.push_back(ReproductionCheck{example, item, expected, actual, ok, std::move(note)});
  }

  std::vector<ReproductionCheck> checks_;
};

std::string verdict(bool member) { return member ? "member" : "not a member"; }
std::string emptiness(bool nonempty) { return nonempty ? "nonempty" : "empty"; }

void partition_tables(Checker& check, const std::string& example, const std::string& label,
                      const PartitionFunctionGame& game,
                      const std::vector<PartitionFigures>& figures) {
  const LppSituation& s = game.situation();
  for (const auto& fig : figures) {
    Partition partition = make_partition(fig.blocks);
    std::size_t p = find_partition(game, partition);
    for (const auto& cell : fig.cells) {
      std::string where = "(" + cell.block.to_string() + "|" + partition.to_string() + ")";
      const Rational& share = game.share(cell.block, p);
      const Rational& value = game.value(cell.block, p);
      check.decimal(example, label + where, cell.share, share);
      // Published values evaluated at rounded shares drift by more than a cent.
      std::string note = "value at the share rounded to 0.01 is " +
                         to_decimal_string(coalition_value(s, cell.block, rounded(share)), 2);
      check.decimal(example, "V^" + label + where, cell.value, value, note);
    }
  }
}

void game_table(Checker& check, const std::string& example, const std::string& label,
                const CharacteristicGame& game,
                const std::vector<std::pair<Coalition, const char*>>& figures) {
  for (const auto& [coalition, figure] : figures) {
    check.decimal(example, label + "(" + coalition.to_string() + ")", figure,
                  game.value(coalition));
  }
}

}  // namespace

std::vector<ReproductionCheck> reproduce_examples() {
  Checker check;
  const LppSituation s = example3_scenario().situation;
  const Coalition c1 = firms({1}), c2 = firms({2}), c3 = firms({3});
  const Coalition c12 = firms({1, 2}), c13 = firms({1, 3}), c23 = firms({2, 3});
  const Coalition n = firms({1, 2, 3});

  // Example 3: demands and the CEA partition function game.
  {
    const std::string ex = "Example 3";
    const std::vector<std::pair<Coalition, long>> demands = {
        {c1, 20}, {c2, 20}, {c3, 25}, {c12, 40}, {c13, 46}, {c23, 45}, {n, 66}};
    for (const auto& [coalition, d] : demands) {
      check.exact(ex, "d" + coalition.to_string(), Rational(d), optimal_demand(s, coalition));
    }
    PartitionFunctionGame game = build_game(s, Rule::kConstrainedEqualAwards);
    partition_tables(check, ex, "CEA", game,
                     {{{c1, c2, c3},
                       {{c1, "16.67", "666.67"}, {c2, "16.67", "766.67"}, {c3, "16.67", "766.67"}}},
                      {{c12, c3}, {{c12, "25.00", "1150.00"}, {c3, "25.00", "1150.00"}}},
                      {{c13, c2}, {{c13, "30.00", "1380.00"}, {c2, "20.00", "920.00"}}},
                      {{c23, c1}, {{c23, "30.00", "1380.00"}, {c1, "20.00", "720.00"}}},
                      {{n}, {{n, "50.00", "2300.00"}}}});
  }

  // Example 5: optimistic and pessimistic CEA cores.
  {
    const std::string ex = "Example 5";
    PartitionFunctionGame game = build_game(s, Rule::kConstrainedEqualAwards);
    CharacteristicGame plus = optimistic_game(game);
    CharacteristicGame minus = pessimistic_game(game);
    game_table(check, ex, "v+", plus,
               {{c1, "720.00"}, {c2, "920.00"}, {c3, "1150.00"}, {c12, "1150.00"},
                {c13, "1380.00"}, {c23, "1380.00"}, {n, "2300.00"}});
    game_table(check, ex, "v-", minus,
               {{c1, "666.67"}, {c2, "766.67"}, {c3, "766.67"}, {c12, "1150.00"},
                {c13, "1380.00"}, {c23, "1380.00"}, {n, "2300.00"}});
    CoreVerdict optimistic = core_nonempty(plus);
    check.text(ex, "C(v+)", "empty", emptiness(optimistic.nonempty));
    check.text(ex, "C(v+) certificate", "720 + 920 + 1150 > 2300",
               optimistic.nonempty ? "-" : describe_certificate(plus, optimistic.certificate, 0));
    check.text(ex, "(700, 800, 800) in C(v-)", "member",
               verdict(in_core(minus, {700, 800, 800}).member));
  }

  // Example 6: resource allocation games under CEA.
  {
    const std::string ex = "Example 6";
    PartitionFunctionGame game = build_game(s, Rule::kConstrainedEqualAwards);
    ResourceGame plus = resource_game(game, Outlook::kOptimistic);
    ResourceGame minus = resource_game(game, Outlook::kPessimistic);
    game_table(check, ex, "R+", plus.game,
               {{c1, "20.00"}, {c2, "20.00"}, {c3, "25.00"}, {c12, "25.00"}, {c13, "30.00"},
                {c23, "30.00"}, {n, "50.00"}});
    game_table(check, ex, "R-", minus.game,
               {{c1, "16.67"}, {c2, "16.67"}, {c3, "16.67"}, {c12, "25.00"}, {c13, "30.00"},
                {c23, "30.00"}, {n, "50.00"}});
    check.text(ex, "C(R+)", "empty", emptiness(core_nonempty(plus.game).nonempty));
    const Rational third = make_rational(50, 3);
    check.text(ex, "(50/3, 50/3, 50/3) in C(R-)", "member",
               verdict(in_core(minus.game, {third, third, third}).member));
  }

  // Example 9: the proportional rule.
  {
    const std::string ex = "Example 9";
    PartitionFunctionGame game = build_game(s, Rule::kProportional);
    partition_tables(check, ex, "PROP", game,
                     {{{c1, c2, c3},
                       {{c1, "15.38", "646.08"}, {c2, "15.38", "707.48"}, {c3, "19.23", "884.58"}}},
                      {{c12, c3}, {{c12, "30.77", "1415.42"}, {c3, "19.23", "884.58"}}},
                      {{c13, c2}, {{c13, "34.85", "1603.10"}, {c2, "15.15", "696.90"}}},
                      {{c23, c1}, {{c23, "34.62", "1592.52"}, {c1, "15.38", "646.08"}}},
                      {{n}, {{n, "50.00", "2300.00"}}}});
    ResourceGame minus = resource_game(game, Outlook::kPessimistic);
    game_table(check, ex, "R-", minus.game,
               {{c1, "15.38"}, {c2, "15.15"}, {c3, "19.23"}, {c12, "30.77"}, {c13, "34.85"},
                {c23, "34.62"}, {n, "50.00"}});
    CharacteristicGame pessimistic = pessimistic_game(game);
    for (const auto& [coalition, figure] :
         std::vector<std::pair<Coalition, const char*>>{{c1, "646.08"},
                                                        {c2, "696.90"},
                                                        {c3, "884.58"},
                                                        {c12, "1415.42"},
                                                        {c13, "1603.10"},
                                                        {c23, "1592.52"},
                                                        {n, "2300.00"}}) {
      std::size_t worst = minus.witness[coalition.mask()];
      std::string note = "value at the share rounded to 0.01 is " +
                         to_decimal_string(coalition_value(s, coalition,
                                                           rounded(game.share(coalition, worst))),
                                           2);
      check.decimal(ex, "v-(" + coalition.to_string() + ")", figure,
                    pessimistic.value(coalition), note);
    }
    check.text(ex, "C(R-)", "empty", emptiness(core_nonempty(minus.game).nonempty));
    check.text(ex, "C(v-)", "empty", emptiness(core_nonempty(pessimistic).nonempty));
    const Rational& r1 = minus.game.value(c1);
    const Rational& r3 = minus.game.value(c3);
    const Rational& r13 = minus.game.value(c13);
    check.text(ex, "R-({1}) + R-({3}) < R-({1,3})", "15.38 + 19.23 < 34.85",
               to_decimal_string(r1, 2) + " + " + to_decimal_string(r3, 2) +
                   (r1 + r3 < r13 ? " < " : " >= ") + to_decimal_string(r13, 2));
  }

  // Example 14: duality-based allocation and the permit market.
  {
    const std::string ex = "Example 14";
    const Rational third = make_rational(50, 3);
    const RationalVector h = {third, third, third};
    OwenAllocation owen = owen_allocation(s, h);
    check.text(ex, "dual y*", "(0, 0, 60)", format_vector(owen.dual, 0));
    for (std::size_t i = 0; i < 3; ++i) {
      check.decimal(ex, "Owen x_" + std::to_string(i + 1), "766.67", owen.payoff[i]);
      check.exact(ex, "Owen x_" + std::to_string(i + 1) + " exact", make_rational(2300, 3),
                  owen.payoff[i]);
    }
    PartitionFunctionGame game = build_game(s, Rule::kConstrainedEqualAwards);
    CharacteristicGame minus = pessimistic_game(game);
    check.text(ex, "Owen allocation in C(v-)", "member", verdict(in_core(minus, owen.payoff).member));
    check.text(ex, "(700, 800, 800) in C(v-)", "member",
               verdict(in_core(minus, {700, 800, 800}).member));

    TradeLedger ledger = trade_ledger(s, h, {700, 800, 800});
    check.text(ex, "trade ledger", "feasible", ledger.feasible ? "feasible" : "infeasible");
    if (ledger.feasible) {
      check.exact(ex, "permit price", Rational(50), ledger.price.value_or(Rational(-1)));
      const long finals[] = {10, 20, 20};
      const long revenues[] = {600, 1200, 1200};
      const long nets[] = {700, 800, 800};
      for (std::size_t i = 0; i < 3; ++i) {
        const LedgerRow& row = ledger.rows[i];
        std::string firm = "firm " + std::to_string(i + 1);
        check.exact(ex, firm + " final permits", Rational(finals[i]), row.final_permits);
        check.exact(ex, firm + " revenue", Rational(revenues[i]), row.revenue);
        check.exact(ex, firm + " net", Rational(nets[i]), row.net);
      }
      check.exact(ex, "firm 1 permits sold", make_rational(20, 3), ledger.rows[0].permits_sold);
      check.exact(ex, "manager revenue", Rational(700), ledger.manager_revenue);
    }
  }
  return check.take();
}

}  // namespace permit_games
