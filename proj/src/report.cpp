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

#include "permit_games/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace permit_games {

Section& Report::add_section(std::string title, std::vector<std::string> columns) {
  sections.push_back(Section{std::move(title), std::move(columns), {}, {}});
  return sections.back();
}

std::string format_vector(const RationalVector& values, int precision) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_decimal_string(values[i], precision);
  }
  return out + ")";
}

namespace {

std::string table_text(const Cell& cell, int precision) {
  if (const auto* text = std::get_if<std::string>(&cell)) return *text;
  const Rational& value = std::get<Rational>(cell);
  std::string decimal = to_decimal_string(value, precision);
  if (value.get_den() == 1) return decimal;
  return decimal + " (" + to_fraction_string(value) + ")";
}

std::string render_table(const Report& report, int precision) {
  std::ostringstream out;
  bool first = true;
  for (const auto& section : report.sections) {
    if (!first) out << "\n";
    first = false;
    out << "== " << section.title << " ==\n";
    if (!section.columns.empty()) {
      std::vector<std::vector<std::string>> grid;
      grid.push_back(section.columns);
      for (const auto& row : section.rows) {
        std::vector<std::string> line;
        for (const auto& cell : row) line.push_back(table_text(cell, precision));
        grid.push_back(std::move(line));
      }
      std::vector<std::size_t> width(section.columns.size(), 0);
      for (const auto& line : grid) {
        for (std::size_t k = 0; k < line.size() && k < width.size(); ++k) {
          width[k] = std::max(width[k], line[k].size());
        }
      }
      auto emit = [&](const std::vector<std::string>& line) {
        std::string text;
        for (std::size_t k = 0; k < line.size(); ++k) {
          if (k > 0) text += "  ";
          text += line[k];
          if (k + 1 < line.size() && k < width.size()) {
            text.append(width[k] - line[k].size(), ' ');
          }
        }
        out << text << "\n";
      };
      emit(grid.front());
      std::size_t rule = 0;
      for (std::size_t k = 0; k < width.size(); ++k) rule += width[k] + (k > 0 ? 2 : 0);
      out << std::string(rule, '-') << "\n";
      for (std::size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
    }
    for (const auto& note : section.notes) out << note << "\n";
  }
  return out.str();
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const Report& report, int precision) {
  std::ostringstream out;
  bool first = true;
  for (const auto& section : report.sections) {
    if (!first) out << "\n";
    first = false;
    // A column is numeric when any of its cells is a number.
    std::vector<bool> numeric(section.columns.size(), false);
    for (const auto& row : section.rows) {
      for (std::size_t k = 0; k < row.size() && k < numeric.size(); ++k) {
        if (std::holds_alternative<Rational>(row[k])) numeric[k] = true;
      }
    }
    out << "section";
    for (std::size_t k = 0; k < section.columns.size(); ++k) {
      out << "," << csv_escape(section.columns[k]);
      if (numeric[k]) out << "," << csv_escape(section.columns[k] + "_exact");
    }
    out << "\n";
    for (const auto& row : section.rows) {
      out << csv_escape(section.title);
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (const auto* value = std::get_if<Rational>(&row[k])) {
          out << "," << to_decimal_string(*value, precision) << "," << to_fraction_string(*value);
        } else {
          out << "," << csv_escape(std::get<std::string>(row[k]));
          if (k < numeric.size() && numeric[k]) out << ",";
        }
      }
      out << "\n";
    }
    for (const auto& note : section.notes) {
      out << csv_escape(section.title) << "," << csv_escape(note) << "\n";
    }
  }
  return out.str();
}

std::string render_json(const Report& report, int precision) {
  nlohmann::ordered_json sections = nlohmann::ordered_json::array();
  for (const auto& section : report.sections) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : section.rows) {
      nlohmann::ordered_json line = nlohmann::ordered_json::array();
      for (const auto& cell : row) {
        if (const auto* value = std::get_if<Rational>(&cell)) {
          line.push_back({{"decimal", to_decimal_string(*value, precision)},
                          {"exact", to_fraction_string(*value)}});
        } else {
          line.push_back(std::get<std::string>(cell));
        }
      }
      rows.push_back(std::move(line));
    }
    nlohmann::ordered_json entry;
    entry["title"] = section.title;
    entry["columns"] = section.columns;
    entry["rows"] = std::move(rows);
    entry["notes"] = section.notes;
    sections.push_back(std::move(entry));
  }
  nlohmann::ordered_json root;
  root["precision"] = precision;
  root["sections"] = std::move(sections);
  return root.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& report, ReportFormat format, int precision) {
  switch (format) {
    case ReportFormat::kTable:
      return render_table(report, precision);
    case ReportFormat::kCsv:
      return render_csv(report, precision);
    case ReportFormat::kJson:
      return render_json(report, precision);
  }
  return {};
}

}  // namespace permit_games
