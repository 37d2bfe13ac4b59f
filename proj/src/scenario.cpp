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

#include "permit_games/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "permit_games/errors.hpp"

namespace permit_games {

std::string to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::kTable:
      return "table";
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kJson:
      return "json";
  }
  return "?";
}

ReportFormat parse_format(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "table") return ReportFormat::kTable;
  if (lower == "csv") return ReportFormat::kCsv;
  if (lower == "json" || lower == "json-like") return ReportFormat::kJson;
  throw std::invalid_argument("unknown report format '" + std::string(text) +
                              "' (expected table, csv or json)");
}

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& field,
                         const std::string& message) const {
    std::ostringstream out;
    out << source_;
    if (node.IsDefined() && node.Mark().line >= 0) {
      out << ":" << node.Mark().line + 1 << ":" << node.Mark().column + 1;
    }
    out << ": field '" << field << "': " << message;
    throw ScenarioError(out.str());
  }

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ScenarioError(source_ + ": field '" + field + "': " + message);
  }

  YAML::Node require(const YAML::Node& root, const std::string& field) const {
    YAML::Node node = root[field];
    if (!node.IsDefined() || node.IsNull()) fail(field, "missing");
    return node;
  }

  Rational number(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a number");
    try {
      return parse_rational(node.Scalar());
    } catch (const std::exception& e) {
      fail(node, field, e.what());
    }
  }

  RationalVector vector(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of numbers");
    RationalVector out;
    for (std::size_t k = 0; k < node.size(); ++k) {
      out.push_back(number(node[k], field + "[" + std::to_string(k + 1) + "]"));
    }
    return out;
  }

  RationalMatrix matrix(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence() || node.size() == 0) fail(node, field, "expected a list of rows");
    RationalMatrix out;
    for (std::size_t t = 0; t < node.size(); ++t) {
      out.push_back(vector(node[t], field + " row " + std::to_string(t + 1)));
      if (out.back().size() != out.front().size()) {
        fail(node[t], field, "row " + std::to_string(t + 1) + " has " +
                                 std::to_string(out.back().size()) + " entries, row 1 has " +
                                 std::to_string(out.front().size()));
      }
    }
    return out;
  }

  long integer(const YAML::Node& node, const std::string& field) const {
    Rational value = number(node, field);
    if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
      fail(node, field, "expected an integer");
    }
    return value.get_num().get_si();
  }

 private:
  std::string source_;
};

}  // namespace

RationalVector parse_grid(std::string_view text) {
  RationalVector out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw ScenarioError("grid entry '" + item + "': " + e.what());
    }
  }
  if (out.empty()) throw ScenarioError("grid is empty");
  return out;
}

Scenario parse_scenario(const std::string& text, const std::string& source) {
  Reader reader(source);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ScenarioError(source + ":" + std::to_string(e.mark.line + 1) + ":" +
                        std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  if (!root.IsMap()) throw ScenarioError(source + ": expected a mapping at the top level");

  Scenario scenario;
  if (root["name"]) scenario.name = root["name"].as<std::string>();
  LppSituation& s = scenario.situation;
  s.technology = reader.matrix(reader.require(root, "technology"), "technology");
  s.endowments = reader.matrix(reader.require(root, "endowments"), "endowments");
  s.prices = reader.vector(reader.require(root, "prices"), "prices");
  s.tax = reader.number(reader.require(root, "tax"), "tax");
  s.cap = reader.number(reader.require(root, "cap"), "cap");

  if (YAML::Node rule = root["rule"]) {
    try {
      scenario.rule = parse_rule(rule.as<std::string>());
    } catch (const std::invalid_argument& e) {
      reader.fail(rule, "rule", e.what());
    }
  }
  if (YAML::Node options = root["options"]) {
    if (!options.IsMap()) reader.fail(options, "options", "expected a mapping");
    if (YAML::Node limit = options["partition_limit"]) {
      long value = reader.integer(limit, "options.partition_limit");
      if (value < 1) reader.fail(limit, "options.partition_limit", "must be >= 1");
      scenario.options.partition_limit = static_cast<std::size_t>(value);
    }
    if (YAML::Node precision = options["precision"]) {
      long value = reader.integer(precision, "options.precision");
      if (value < 0 || value > 50) reader.fail(precision, "options.precision", "must be in [0, 50]");
      scenario.options.precision = static_cast<int>(value);
    }
    if (YAML::Node format = options["format"]) {
      try {
        scenario.options.format = parse_format(format.as<std::string>());
      } catch (const std::invalid_argument& e) {
        reader.fail(format, "options.format", e.what());
      }
    }
    if (YAML::Node grid = options["grid"]) {
      scenario.options.grid = grid.IsSequence() ? reader.vector(grid, "options.grid")
                                                : parse_grid(grid.as<std::string>());
    }
  }

  try {
    check_dimensions(s);
  } catch (const std::exception& e) {
    throw ScenarioError(source + ": " + e.what());
  }
  auto violations = condition_violations(s);
  if (!violations.empty()) throw ScenarioError(source + ": " + violations.front());
  return scenario;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path + ": cannot open scenario file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path);
}

namespace {

YAML::Node number_node(const Rational& value) {
  return YAML::Node(to_fraction_string(value));
}

YAML::Node row_node(const RationalVector& row) {
  YAML::Node node(YAML::NodeType::Sequence);
  for (const auto& v : row) node.push_back(number_node(v));
  node.SetStyle(YAML::EmitterStyle::Flow);
  return node;
}

YAML::Node matrix_node(const RationalMatrix& matrix) {
  YAML::Node node(YAML::NodeType::Sequence);
  for (const auto& row : matrix) node.push_back(row_node(row));
  return node;
}

}  // namespace

std::string dump_scenario(const Scenario& scenario) {
  YAML::Node root;
  if (!scenario.name.empty()) root["name"] = scenario.name;
  root["technology"] = matrix_node(scenario.situation.technology);
  root["endowments"] = matrix_node(scenario.situation.endowments);
  root["prices"] = row_node(scenario.situation.prices);
  root["tax"] = number_node(scenario.situation.tax);
  root["cap"] = number_node(scenario.situation.cap);
  std::string rule = to_string(scenario.rule);
  std::transform(rule.begin(), rule.end(), rule.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  root["rule"] = rule;
  YAML::Node options;
  options["partition_limit"] = scenario.options.partition_limit;
  options["precision"] = scenario.options.precision;
  options["format"] = to_string(scenario.options.format);
  if (scenario.options.grid) options["grid"] = row_node(*scenario.options.grid);
  root["options"] = options;

  YAML::Emitter out;
  out << root;
  return std::string(out.c_str()) + "\n";
}

Scenario example3_scenario() {
  Scenario scenario;
  scenario.name = "example3";
  LppSituation& s = scenario.situation;
  auto row = [](std::initializer_list<long> values) {
    RationalVector out;
    for (long v : values) out.emplace_back(v);
    return out;
  };
  s.technology = {row({2, 3}), row({3, 2}), row({1, 1})};
  s.endowments = {row({40, 60, 80}), row({60, 40, 50})};
  s.prices = row({50, 60});
  s.tax = 14;
  s.cap = 50;
  return scenario;
}

}  // namespace permit_games
