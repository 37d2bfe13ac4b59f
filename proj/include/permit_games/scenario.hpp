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

#ifndef PERMIT_GAMES_SCENARIO_HPP
#define PERMIT_GAMES_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "permit_games/bankruptcy.hpp"
#include "permit_games/partition_games.hpp"
#include "permit_games/production.hpp"

namespace permit_games {

// Input problem with its location, e.g. "example3.yaml:7:5: field 'prices'".
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { kTable, kCsv, kJson };

std::string to_string(ReportFormat format);
// "table", "csv", "json" (also "json-like").
ReportFormat parse_format(std::string_view text);

struct ScenarioOptions {
  std::size_t partition_limit = kDefaultPartitionLimit;
  // Report levels shared by every claimant in mechanism checks.
  std::optional<RationalVector> grid;
  int precision = 2;
  ReportFormat format = ReportFormat::kTable;

  bool operator==(const ScenarioOptions&) const = default;
};

struct Scenario {
  std::string name;
  LppSituation situation;
  Rule rule = Rule::kConstrainedEqualAwards;
  ScenarioOptions options;

  bool operator==(const Scenario&) const = default;
};

// YAML document with fields technology, endowments, prices, tax, cap and
// optional name, rule, options{partition_limit, grid, precision, format}.
// Numbers may be integers, decimals ("0.25") or fractions ("50/3"), all
// read exactly. The situation is validated; violations name the condition.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& text, const std::string& source = "<string>");

// Inverse of parse_scenario; numbers are written as exact fractions.
std::string dump_scenario(const Scenario& scenario);

// "0, 10, 50/3, 20" -> levels. Throws ScenarioError on bad entries.
RationalVector parse_grid(std::string_view text);

// The three-firm, two-good, two-resource economy used throughout the
// worked examples (c = 14, r = 50).
Scenario example3_scenario();

}  // namespace permit_games

#endif  // PERMIT_GAMES_SCENARIO_HPP
