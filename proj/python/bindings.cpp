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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "permit_games/bankruptcy.hpp"
#include "permit_games/commands.hpp"
#include "permit_games/errors.hpp"
#include "permit_games/mechanism.hpp"
#include "permit_games/partition_games.hpp"
#include "permit_games/production.hpp"
#include "permit_games/report.hpp"
#include "permit_games/reproduce.hpp"
#include "permit_games/scenario.hpp"
#include "permit_games/stability.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction. Ints, Fractions and
// strings like "50/3" or "0.25" are accepted on the way in.
namespace pybind11::detail {
template <>
struct type_caster<permit_games::Rational> {
  PYBIND11_TYPE_CASTER(permit_games::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = permit_games::parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::float_>(src)) return false;
      py::object fraction = py::module_::import("fractions").attr("Fraction")(src);
      std::string num = py::str(fraction.attr("numerator"));
      std::string den = py::str(fraction.attr("denominator"));
      value = permit_games::Rational(mpz_class(num, 10), mpz_class(den, 10));
      value.canonicalize();
      return true;
    } catch (const std::exception&) {
      PyErr_Clear();
      return false;
    }
  }

  static handle cast(const permit_games::Rational& src, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object builtins_int = py::module_::import("builtins").attr("int");
    return fraction(builtins_int(src.get_num().get_str()), builtins_int(src.get_den().get_str()))
        .release();
  }
};
}  // namespace pybind11::detail

namespace pg = permit_games;

namespace {

using Members = std::vector<std::size_t>;

pg::Coalition to_coalition(const Members& members) { return pg::Coalition::of(members); }

py::dict game_dict(const pg::CharacteristicGame& game) {
  py::dict out;
  for (pg::Coalition c : pg::all_coalitions(game.num_players())) {
    out[py::tuple(py::cast(c.members()))] = py::cast(game.value(c));
  }
  return out;
}

pg::CharacteristicGame game_from_dict(std::size_t n, const py::dict& values) {
  pg::CharacteristicGame game(n);
  for (auto item : values) {
    Members members = item.first.cast<Members>();
    game.set_value(to_coalition(members), item.second.cast<pg::Rational>());
  }
  return game;
}

std::vector<Members> partition_blocks(const pg::Partition& p) {
  std::vector<Members> out;
  for (pg::Coalition c : p.blocks) out.push_back(c.members());
  return out;
}

py::dict core_check_dict(const pg::CoreCheck& check) {
  py::dict out;
  out["member"] = check.member;
  out["efficient"] = check.efficient;
  out["violated"] = check.violated ? py::cast(check.violated->members()) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cooperative analysis of production economies with a capped, taxed permit";

  py::register_exception<pg::StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<pg::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<pg::SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception<pg::ScenarioError>(m, "ScenarioError", PyExc_ValueError);

  py::class_<pg::LppSituation>(m, "Situation")
      .def(py::init([](pg::RationalMatrix technology, pg::RationalMatrix endowments,
                       pg::RationalVector prices, pg::Rational tax, pg::Rational cap) {
             pg::LppSituation s{std::move(technology), std::move(endowments), std::move(prices),
                                std::move(tax), std::move(cap)};
             pg::validate(s);
             return s;
           }),
           py::arg("technology"), py::arg("endowments"), py::arg("prices"), py::arg("tax"),
           py::arg("cap"))
      .def_readonly("technology", &pg::LppSituation::technology)
      .def_readonly("endowments", &pg::LppSituation::endowments)
      .def_readonly("prices", &pg::LppSituation::prices)
      .def_readonly("tax", &pg::LppSituation::tax)
      .def_readonly("cap", &pg::LppSituation::cap)
      .def_property_readonly("num_firms", &pg::LppSituation::num_firms)
      .def("__eq__", [](const pg::LppSituation& a, const pg::LppSituation& b) { return a == b; });

  py::class_<pg::Scenario>(m, "Scenario")
      .def_readonly("name", &pg::Scenario::name)
      .def_readonly("situation", &pg::Scenario::situation)
      .def_property_readonly("rule", [](const pg::Scenario& s) { return pg::to_string(s.rule); })
      .def("__eq__", [](const pg::Scenario& a, const pg::Scenario& b) { return a == b; });

  m.def("load_scenario", &pg::load_scenario, py::arg("path"));
  m.def("parse_scenario", &pg::parse_scenario, py::arg("text"), py::arg("source") = "<string>");
  m.def("dump_scenario", &pg::dump_scenario, py::arg("scenario"));
  m.def("example_scenario", &pg::example3_scenario,
        "The three-firm, two-good economy with tax 14 and cap 50.");

  m.def(
      "coalition_value",
      [](const pg::LppSituation& s, const Members& members, const pg::Rational& permits) {
        return pg::coalition_value(s, to_coalition(members), permits);
      },
      py::arg("situation"), py::arg("members"), py::arg("permits"));
  m.def(
      "optimal_demand",
      [](const pg::LppSituation& s, const Members& members) {
        return pg::optimal_demand(s, to_coalition(members));
      },
      py::arg("situation"), py::arg("members"));

  m.def(
      "apply_rule",
      [](const std::string& rule, const pg::Rational& estate, const pg::RationalVector& claims) {
        return pg::apply_rule(pg::parse_rule(rule), {estate, claims});
      },
      py::arg("rule"), py::arg("estate"), py::arg("claims"));

  m.def(
      "partitions",
      [](std::size_t n) {
        std::vector<std::vector<Members>> out;
        for (const auto& p : pg::enumerate_partitions(n)) out.push_back(partition_blocks(p));
        return out;
      },
      py::arg("num_players"));

  py::class_<pg::PartitionFunctionGame>(m, "PartitionGame")
      .def_property_readonly("rule",
                             [](const pg::PartitionFunctionGame& g) { return pg::to_string(g.rule()); })
      .def_property_readonly("partitions",
                             [](const pg::PartitionFunctionGame& g) {
                               std::vector<std::vector<Members>> out;
                               for (const auto& p : g.partitions()) out.push_back(partition_blocks(p));
                               return out;
                             })
      .def(
          "share",
          [](const pg::PartitionFunctionGame& g, const Members& members, std::size_t p) {
            return g.share(to_coalition(members), p);
          },
          py::arg("members"), py::arg("partition"))
      .def(
          "value",
          [](const pg::PartitionFunctionGame& g, const Members& members, std::size_t p) {
            return g.value(to_coalition(members), p);
          },
          py::arg("members"), py::arg("partition"))
      .def("pessimistic", [](const pg::PartitionFunctionGame& g) {
        return game_dict(pg::pessimistic_game(g));
      })
      .def("optimistic", [](const pg::PartitionFunctionGame& g) {
        return game_dict(pg::optimistic_game(g));
      })
      .def(
          "resource_game",
          [](const pg::PartitionFunctionGame& g, bool optimistic) {
            return game_dict(pg::resource_game(g, optimistic ? pg::Outlook::kOptimistic
                                                             : pg::Outlook::kPessimistic)
                                 .game);
          },
          py::arg("optimistic") = false);

  m.def(
      "build_game",
      [](const pg::LppSituation& s, const std::string& rule, std::size_t limit) {
        return pg::build_game(s, pg::parse_rule(rule), limit);
      },
      py::arg("situation"), py::arg("rule") = "cea",
      py::arg("partition_limit") = pg::kDefaultPartitionLimit);

  m.def(
      "core_nonempty",
      [](std::size_t n, const py::dict& values) {
        pg::CharacteristicGame game = game_from_dict(n, values);
        pg::CoreVerdict verdict = pg::core_nonempty(game);
        py::dict out;
        out["nonempty"] = verdict.nonempty;
        out["witness"] = verdict.witness ? py::cast(*verdict.witness) : py::none();
        out["certificate"] = verdict.nonempty
                                 ? py::none()
                                 : py::cast(pg::describe_certificate(game, verdict.certificate));
        return out;
      },
      py::arg("num_players"), py::arg("values"));
  m.def(
      "in_core",
      [](std::size_t n, const py::dict& values, const pg::RationalVector& x) {
        return core_check_dict(pg::in_core(game_from_dict(n, values), x));
      },
      py::arg("num_players"), py::arg("values"), py::arg("allocation"));

  m.def(
      "owen_allocation",
      [](const pg::LppSituation& s, const pg::RationalVector& permits) {
        pg::OwenAllocation owen = pg::owen_allocation(s, permits);
        return py::make_tuple(owen.payoff, owen.dual);
      },
      py::arg("situation"), py::arg("permits"));

  m.def(
      "stable_pipeline",
      [](const pg::LppSituation& s, const std::string& rule) {
        pg::PipelineReport r = pg::stable_pipeline(s, pg::parse_rule(rule));
        py::dict out;
        out["regime"] = pg::to_string(r.regime);
        out["permits"] = r.permits;
        out["permits_in_resource_core"] = r.permits_in_resource_minus.member;
        out["money"] = r.money ? py::cast(r.money->payoff) : py::none();
        out["dual"] = r.money ? py::cast(r.money->dual) : py::none();
        out["money_in_pessimistic_core"] =
            r.money_in_pessimistic ? py::cast(r.money_in_pessimistic->member) : py::none();
        out["pairwise_condition"] = r.pairwise_condition;
        out["merge_condition"] = r.merge_condition;
        out["stable"] = r.stable;
        return out;
      },
      py::arg("situation"), py::arg("rule") = "cea");

  m.def(
      "dominance_check",
      [](const pg::LppSituation& s, const std::string& rule, const pg::RationalVector& levels) {
        pg::DominanceReport r = pg::dominance_check(s, pg::make_config(s, pg::parse_rule(rule), levels));
        py::dict out;
        out["truthful_dominant"] = r.truthful_dominant;
        out["cells_checked"] = r.cells_checked;
        if (r.counterexample) {
          py::dict dev;
          dev["claimant"] = r.counterexample->claimant;
          dev["profile"] = r.counterexample->profile;
          dev["report"] = r.counterexample->deviating_report;
          dev["truthful_payoff"] = r.counterexample->baseline_payoff;
          dev["deviating_payoff"] = r.counterexample->deviating_payoff;
          out["counterexample"] = dev;
        } else {
          out["counterexample"] = py::none();
        }
        return out;
      },
      py::arg("situation"), py::arg("rule"), py::arg("levels"));

  m.def(
      "run_command",
      [](const std::string& command, const pg::Scenario& scenario, const std::string& format,
         int precision) {
        pg::CommandResult result = pg::run_command(command, scenario);
        return py::make_tuple(pg::render(result.report, pg::parse_format(format), precision),
                              result.exit_code);
      },
      py::arg("command"), py::arg("scenario"), py::arg("format") = "table",
      py::arg("precision") = 2);

  m.def("reproduce_examples", [] {
    py::list out;
    for (const auto& check : pg::reproduce_examples()) {
      py::dict row;
      row["example"] = check.example;
      row["item"] = check.item;
      row["expected"] = check.expected;
      row["actual"] = check.actual;
      row["ok"] = check.ok;
      row["note"] = check.note;
      out.append(row);
    }
    return out;
  });
}
