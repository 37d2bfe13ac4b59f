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

// permit-games: command-line front end.
//
//   permit-games <command> --scenario FILE [--rule cea|cel|prop|tal]
//       [--precision N] [--format table|csv|json] [--partition-limit N]
//       [--grid LEVELS] [--dump-scenario FILE] [--game NAME]
//       [--permits LIST] [--target LIST] [--price P]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "permit_games/commands.hpp"
#include "permit_games/report.hpp"
#include "permit_games/scenario.hpp"

namespace pg = permit_games;

namespace {

std::string command_list() {
  std::string out;
  for (const auto& name : pg::command_names()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Cooperative analysis of production economies under a capped, taxed permit"};
  app.set_version_flag("--version", "permit-games 1.0.0");

  std::string command;
  std::string scenario_path;
  std::optional<std::string> rule, format, grid, dump_path, permits, target, price;
  std::optional<int> precision;
  std::optional<std::size_t> partition_limit;
  pg::CommandFlags flags;

  app.add_option("command", command, "One of: " + command_list());
  app.add_option("--scenario,-s", scenario_path, "Scenario file (YAML)");
  app.add_option("--rule,-r", rule, "Bankruptcy rule: cea, cel, prop or tal");
  app.add_option("--precision,-p", precision, "Decimal digits in reports")
      ->check(CLI::Range(0, 50));
  app.add_option("--format,-f", format, "Report format: table, csv or json");
  app.add_option("--partition-limit", partition_limit, "Largest firm count to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", grid, "Mechanism report levels, e.g. \"0,10,50/3,50\"");
  app.add_option("--dump-scenario", dump_path, "Write the effective scenario (\"-\" for stdout)");
  app.add_option("--game", flags.game,
                 "cores: pessimistic, optimistic, resource-minus, resource-plus or all");
  app.add_option("--permits", permits, "trade: initial permit allocation, comma separated");
  app.add_option("--target", target, "trade: target money allocation, comma separated");
  app.add_option("--price", price, "trade: fixed permit price");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pg::kExitInputError;
  }

  try {
    if (command.empty() && !dump_path) {
      std::cerr << "error: no command given; expected one of: " << command_list() << "\n";
      return pg::kExitInputError;
    }
    pg::Scenario scenario;
    if (!scenario_path.empty()) {
      scenario = pg::load_scenario(scenario_path);
    } else if (command != "reproduce-paper") {
      std::cerr << "error: --scenario is required\n";
      return pg::kExitInputError;
    } else {
      scenario = pg::example3_scenario();
    }

    if (const char* env = std::getenv("PERMIT_GAMES_FORMAT"); env && *env) {
      scenario.options.format = pg::parse_format(env);
    }
    if (format) scenario.options.format = pg::parse_format(*format);
    if (rule) scenario.rule = pg::parse_rule(*rule);
    if (precision) scenario.options.precision = *precision;
    if (partition_limit) scenario.options.partition_limit = *partition_limit;
    if (grid) scenario.options.grid = pg::parse_grid(*grid);
    if (permits) flags.permits = pg::parse_grid(*permits);
    if (target) flags.target = pg::parse_grid(*target);
    if (price) flags.price = pg::parse_rational(*price);

    if (dump_path) {
      std::string text = pg::dump_scenario(scenario);
      if (*dump_path == "-") {
        std::cout << text;
      } else {
        std::ofstream out(*dump_path);
        if (!out) {
          std::cerr << "error: cannot write " << *dump_path << "\n";
          return pg::kExitInputError;
        }
        out << text;
      }
      if (command.empty()) return pg::kExitOk;
    }

    pg::CommandResult result = pg::run_command(command, scenario, flags);
    std::string text =
        pg::render(result.report, scenario.options.format, scenario.options.precision);
    (result.exit_code == pg::kExitInputError ? std::cerr : std::cout) << text;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pg::kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
