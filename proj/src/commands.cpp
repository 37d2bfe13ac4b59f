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

#include "permit_games/commands.hpp"

#include <algorithm>
#include <stdexcept>

#include "permit_games/errors.hpp"
#include "permit_games/mechanism.hpp"
#include "permit_games/partition_games.hpp"
#include "permit_games/reproduce.hpp"
#include "permit_games/stability.hpp"

namespace permit_games {

namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string firm_label(std::size_t i) { return "firm " + std::to_string(i + 1); }

void add_game_columns(Section& section, std::size_t n,
                      const std::vector<const CharacteristicGame*>& games) {
  for (Coalition coalition : coalitions_by_size(n)) {
    std::vector<Cell> row{coalition.to_string()};
    for (const auto* game : games) row.emplace_back(game->value(coalition));
    section.add_row(std::move(row));
  }
}

CommandResult demands(const Scenario& scenario) {
  CommandResult result;
  const LppSituation& s = scenario.situation;
  RationalVector d = all_demands(s);
  Section& table = result.report.add_section("demands", {"coalition", "d_S", "value(S; d_S)"});
  for (Coalition coalition : coalitions_by_size(s.num_firms())) {
    table.add_row({coalition.to_string(), d[coalition.mask()],
                   coalition_value(s, coalition, d[coalition.mask()])});
  }
  table.notes.push_back("cap r = " + to_fraction_string(s.cap) +
                        ", tax c = " + to_fraction_string(s.tax));
  return result;
}

void describe_partitions(Report& report, const PartitionFunctionGame& game) {
  Section& table = report.add_section("partition function game (" + to_string(game.rule()) + ")",
                                      {"partition", "block", "d_S", "f(S|P)", "V(S|P)"});
  for (std::size_t p = 0; p < game.partitions().size(); ++p) {
    const std::string label = game.partitions()[p].to_string();
    for (const auto& cell : game.cells(p)) {
      table.add_row({label, cell.block.to_string(), game.demand(cell.block), cell.share,
                     cell.value});
    }
  }
}

CommandResult game_command(const Scenario& scenario) {
  CommandResult result;
  PartitionFunctionGame game =
      build_game(scenario.situation, scenario.rule, scenario.options.partition_limit);
  describe_partitions(result.report, game);
  CharacteristicGame minus = pessimistic_game(game);
  CharacteristicGame plus = optimistic_game(game);
  Section& derived = result.report.add_section("derived games", {"coalition", "v-", "v+"});
  add_game_columns(derived, game.num_players(), {&minus, &plus});
  return result;
}

struct NamedGame {
  std::string name;
  CharacteristicGame game;
};

std::vector<NamedGame> selected_games(const PartitionFunctionGame& game, const std::string& which) {
  static const std::vector<std::string> kNames = {"pessimistic", "optimistic", "resource-minus",
                                                  "resource-plus"};
  if (which != "all" && std::find(kNames.begin(), kNames.end(), which) == kNames.end()) {
    throw std::invalid_argument("unknown game '" + which +
                                "' (expected pessimistic, optimistic, resource-minus, "
                                "resource-plus or all)");
  }
  std::vector<NamedGame> out;
  auto wanted = [&](const std::string& name) { return which == "all" || which == name; };
  if (wanted("pessimistic")) out.push_back({"pessimistic", pessimistic_game(game)});
  if (wanted("optimistic")) out.push_back({"optimistic", optimistic_game(game)});
  if (wanted("resource-minus")) {
    out.push_back({"resource-minus", resource_game(game, Outlook::kPessimistic).game});
  }
  if (wanted("resource-plus")) {
    out.push_back({"resource-plus", resource_game(game, Outlook::kOptimistic).game});
  }
  return out;
}

CommandResult cores(const Scenario& scenario, const CommandFlags& flags) {
  CommandResult result;
  const int precision = scenario.options.precision;
  PartitionFunctionGame game =
      build_game(scenario.situation, scenario.rule, scenario.options.partition_limit);
  std::vector<NamedGame> games = selected_games(game, flags.game);
  Section& table =
      result.report.add_section("cores (" + to_string(scenario.rule) + ")",
                                {"game", "core", "witness or violated inequality"});
  bool any_empty = false;
  for (const auto& [name, g] : games) {
    CoreVerdict verdict = core_nonempty(g);
    if (verdict.nonempty) {
      table.add_row({name, std::string("nonempty"), format_vector(*verdict.witness, precision)});
    } else {
      any_empty = true;
      table.add_row({name, std::string("empty"),
                     describe_certificate(g, verdict.certificate, precision)});
    }
  }
  if (flags.game != "all" && any_empty) result.exit_code = kExitNegative;
  return result;
}

CommandResult resource_games(const Scenario& scenario) {
  CommandResult result;
  PartitionFunctionGame game =
      build_game(scenario.situation, scenario.rule, scenario.options.partition_limit);
  ResourceGame minus = resource_game(game, Outlook::kPessimistic);
  ResourceGame plus = resource_game(game, Outlook::kOptimistic);
  Section& table =
      result.report.add_section("resource allocation games (" + to_string(scenario.rule) + ")",
                                {"coalition", "R-", "worst partition", "R+", "best partition"});
  for (Coalition coalition : coalitions_by_size(game.num_players())) {
    table.add_row({coalition.to_string(), minus.game.value(coalition),
                   game.partitions()[minus.witness[coalition.mask()]].to_string(),
                   plus.game.value(coalition),
                   game.partitions()[plus.witness[coalition.mask()]].to_string()});
  }
  return result;
}

std::string core_check_text(const CoreCheck& check) {
  if (check.member) return "member";
  if (!check.efficient) return "not efficient";
  return "blocked by " + check.violated->to_string();
}

CommandResult pipeline(const Scenario& scenario) {
  CommandResult result;
  const LppSituation& s = scenario.situation;
  PartitionFunctionGame game = build_game(s, scenario.rule, scenario.options.partition_limit);
  PipelineReport p = stable_pipeline(game);

  Section& summary = result.report.add_section("pipeline (" + to_string(p.rule) + ")",
                                               {"quantity", "value"});
  summary.add_row({std::string("regime"), to_string(p.regime)});
  summary.add_row({std::string("d_N"), p.grand_demand});
  summary.add_row({std::string("sum of d_i"), sum(p.individual_demands)});
  summary.add_row({std::string("cap r"), p.cap});
  summary.add_row({std::string("h in C(R-)"), core_check_text(p.permits_in_resource_minus)});
  summary.add_row({std::string("h in C(R+)"), core_check_text(p.permits_in_resource_plus)});
  summary.add_row({std::string("d_i + d_j >= 2r/n (CEA)"), yes_no(p.pairwise_condition)});
  summary.add_row({std::string("merge condition"),
                   p.merge_condition ? std::string("holds")
                                     : "fails at " + p.merge_condition_violated->to_string()});
  if (p.money) {
    std::string dual;
    for (std::size_t t = 0; t < p.money->dual.size(); ++t) {
      dual += (t ? ", " : "") + to_fraction_string(p.money->dual[t]);
    }
    summary.add_row({std::string("dual y*"), "(" + dual + ")"});
    summary.add_row({std::string("y*_perm > c"), yes_no(*p.dual_above_tax)});
    summary.add_row({std::string("x in C(v-)"), core_check_text(*p.money_in_pessimistic)});
    if (p.money_in_optimistic) {
      summary.add_row({std::string("x in C(v+)"), core_check_text(*p.money_in_optimistic)});
    }
  }

  Section& firms = result.report.add_section("allocations", {"firm", "d_i", "h_i", "x_i"});
  for (std::size_t i = 0; i < p.individual_demands.size(); ++i) {
    std::vector<Cell> row{firm_label(i), p.individual_demands[i], p.permits[i]};
    row.emplace_back(p.money ? Cell(p.money->payoff[i]) : Cell(std::string("-")));
    firms.add_row(std::move(row));
  }
  if (p.stable) {
    firms.notes.push_back("stable: money allocation verified in the pessimistic core");
  } else {
    firms.notes.push_back("not stable: no verified pessimistic-core allocation");
    result.exit_code = kExitNegative;
  }
  return result;
}

RationalVector default_grid(const LppSituation& s) {
  RationalVector levels{Rational(0), s.cap, s.cap / Rational(static_cast<long>(s.num_firms()))};
  return levels;
}

CommandResult mechanism(const Scenario& scenario) {
  CommandResult result;
  const LppSituation& s = scenario.situation;
  validate(s);
  RationalVector levels = scenario.options.grid ? *scenario.options.grid : default_grid(s);
  if (!scenario.options.grid) {
    // Truthful demands and the truthful allocation (its water levels).
    RationalVector demanded;
    for (std::size_t i = 0; i < s.num_firms(); ++i) {
      demanded.push_back(optimal_demand(s, Coalition::singleton(i)));
    }
    RationalVector served = mechanism_allocation(scenario.rule, s.cap, demanded);
    levels.insert(levels.end(), demanded.begin(), demanded.end());
    levels.insert(levels.end(), served.begin(), served.end());
  }
  MechanismConfig config = make_config(s, scenario.rule, levels);
  RationalVector truth = true_demands(s, config.claimants);
  DominanceReport report = dominance_check(s, config);

  Section& grid = result.report.add_section("mechanism (" + to_string(scenario.rule) + ")",
                                            {"claimant", "true demand", "report levels"});
  for (std::size_t k = 0; k < truth.size(); ++k) {
    std::string text;
    for (std::size_t j = 0; j < config.grid[k].size(); ++j) {
      text += (j ? ", " : "") + to_fraction_string(config.grid[k][j]);
    }
    grid.add_row({config.claimants.blocks[k].to_string(), truth[k], text});
  }
  grid.notes.push_back("cells checked: " + std::to_string(report.cells_checked));
  if (report.truthful_dominant) {
    grid.notes.push_back("truth-telling is weakly dominant on the grid");
  } else {
    const Deviation& dev = *report.counterexample;
    const int precision = scenario.options.precision;
    Section& counter = result.report.add_section(
        "counterexample", {"claimant", "profile", "report", "truthful payoff", "deviating payoff"});
    counter.add_row({config.claimants.blocks[dev.claimant].to_string(),
                     format_vector(dev.profile, precision), dev.deviating_report,
                     dev.baseline_payoff, dev.deviating_payoff});
    counter.notes.push_back("truth-telling is not dominant");
    result.exit_code = kExitNegative;
  }
  return result;
}

CommandResult trade(const Scenario& scenario, const CommandFlags& flags) {
  CommandResult result;
  const LppSituation& s = scenario.situation;
  RationalVector permits;
  RationalVector target;
  if (flags.permits && flags.target) {
    permits = *flags.permits;
    target = *flags.target;
  } else {
    PipelineReport p = stable_pipeline(s, scenario.rule, scenario.options.partition_limit);
    permits = flags.permits ? *flags.permits : p.permits;
    if (flags.target) {
      target = *flags.target;
    } else {
      if (sgn(sum(permits) - s.cap) != 0) {
        throw PreconditionError("permits must sum to the cap");
      }
      if (!(p.grand_demand > s.cap)) {
        throw PreconditionError("no default target: d_N <= r; pass --target");
      }
      target = owen_allocation(s, permits).payoff;
    }
  }
  TradeLedger ledger = trade_ledger(s, permits, target, flags.price);

  Section& table = result.report.add_section(
      "trade ledger", {"firm", "initial permits", "final permits", "revenue", "tax paid",
                       "permits sold", "trade cash", "net"});
  for (const auto& row : ledger.rows) {
    table.add_row({firm_label(row.firm), row.initial_permits, row.final_permits, row.revenue,
                   row.tax_paid, row.permits_sold, row.trade_cash, row.net});
  }
  if (ledger.feasible) {
    table.notes.push_back(ledger.price ? "permit price: " + to_fraction_string(*ledger.price)
                                       : std::string("no trade needed"));
    table.notes.push_back("manager revenue: " + to_fraction_string(ledger.manager_revenue));
  } else {
    table.notes.push_back("infeasible: " + ledger.reason);
    result.exit_code = kExitNegative;
  }
  return result;
}

CommandResult reproduce() {
  CommandResult result;
  std::vector<ReproductionCheck> checks = reproduce_examples();
  Section& table = result.report.add_section(
      "published examples", {"example", "item", "expected", "computed", "status"});
  std::size_t failures = 0;
  for (const auto& check : checks) {
    table.add_row({check.example, check.item, check.expected, check.actual,
                   std::string(check.ok ? "ok" : "MISMATCH")});
    if (!check.ok) {
      ++failures;
      if (!check.note.empty()) table.notes.push_back(check.item + ": " + check.note);
    }
  }
  table.notes.push_back(std::to_string(checks.size() - failures) + " of " +
                        std::to_string(checks.size()) + " checks match");
  if (failures > 0) result.exit_code = kExitNegative;
  return result;
}

CommandResult usage(const std::string& command) {
  CommandResult result;
  std::string names;
  for (const auto& name : command_names()) names += (names.empty() ? "" : ", ") + name;
  Section& section = result.report.add_section("usage");
  section.notes.push_back("unknown command '" + command + "'; expected one of: " + names);
  result.exit_code = kExitInputError;
  return result;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> kNames = {
      "demands", "game",      "cores", "resource-games", "pipeline",
      "mechanism", "trade", "reproduce-paper"};
  return kNames;
}

CommandResult run_command(const std::string& command, const Scenario& scenario,
                          const CommandFlags& flags) {
  try {
    if (command == "reproduce-paper") return reproduce();
    if (std::find(command_names().begin(), command_names().end(), command) ==
        command_names().end()) {
      return usage(command);
    }
    validate(scenario.situation);
    if (command == "demands") return demands(scenario);
    if (command == "game") return game_command(scenario);
    if (command == "cores") return cores(scenario, flags);
    if (command == "resource-games") return resource_games(scenario);
    if (command == "pipeline") return pipeline(scenario);
    if (command == "mechanism") return mechanism(scenario);
    return trade(scenario, flags);
  } catch (const std::logic_error& e) {
    // StructuralError, PreconditionError, SizeLimitError and bad flags.
    CommandResult result;
    result.report.add_section("error").notes.push_back(std::string("error: ") + e.what());
    result.exit_code = kExitInputError;
    return result;
  }
}

}  // namespace permit_games
