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

#ifndef PERMIT_GAMES_REPORT_HPP
#define PERMIT_GAMES_REPORT_HPP

#include <string>
#include <variant>
#include <vector>

#include "permit_games/rational.hpp"
#include "permit_games/scenario.hpp"

namespace permit_games {

// A table cell is either text or an exact number. Numbers are rendered
// twice: as a decimal at the report precision and as an exact fraction.
using Cell = std::variant<std::string, Rational>;

struct Section {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Free-form verdict lines printed after the table.
  std::vector<std::string> notes;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Report {
  std::vector<Section> sections;

  Section& add_section(std::string title, std::vector<std::string> columns = {});
};

// table: aligned columns, non-integers shown as "16.67 (50/3)".
// csv: one block per section; each number column is followed by an
// "<name>_exact" column.
// json: {"sections": [...]} with numbers as {"decimal", "exact"}.
std::string render(const Report& report, ReportFormat format, int precision);

// "(16.67, 16.67, 16.67)" at the given precision.
std::string format_vector(const RationalVector& values, int precision);

}  // namespace permit_games

#endif  // PERMIT_GAMES_REPORT_HPP
