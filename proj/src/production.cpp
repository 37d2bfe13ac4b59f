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

#include "permit_games/production.hpp"

#include "permit_games/errors.hpp"

namespace permit_games {

RationalVector LppSituation::resources_of(Coalition coalition) const {
  RationalVector pooled(num_resources(), Rational(0));
  for (std::size_t t = 0; t < num_resources(); ++t) {
    for (std::size_t i : coalition.members()) pooled[t] += endowments[t][i];
  }
  return pooled;
}

void check_dimensions(const LppSituation& s) {
  const std::size_t g = s.num_goods();
  const std::size_t q = s.num_resources();
  if (g == 0) throw StructuralError("at least one good is required");
  if (q == 0) throw StructuralError("at least one resource is required");
  if (s.num_firms() == 0) throw StructuralError("at least one firm is required");
  if (s.num_firms() > kMaxPlayers) {
    throw SizeLimitError("at most " + std::to_string(kMaxPlayers) + " firms supported");
  }
  if (s.technology.size() != q + 1) {
    throw StructuralError("technology matrix needs " + std::to_string(q + 1) +
                          " rows (one per resource plus the permit row), got " +
                          std::to_string(s.technology.size()));
  }
  for (std::size_t t = 0; t <= q; ++t) {
    if (s.technology[t].size() != g) {
      throw StructuralError("technology row " + std::to_string(t + 1) + " has " +
                            std::to_string(s.technology[t].size()) + " entries, expected " +
                            std::to_string(g));
    }
  }
  for (std::size_t t = 0; t < q; ++t) {
    if (s.endowments[t].size() != s.num_firms()) {
      throw StructuralError("endowment row " + std::to_string(t + 1) + " has " +
                            std::to_string(s.endowments[t].size()) + " entries, expected " +
                            std::to_string(s.num_firms()));
    }
  }
}

std::vector<std::string> condition_violations(const LppSituation& s) {
  std::vector<std::string> out;
  const std::size_t g = s.num_goods();
  const std::size_t q = s.num_resources();

  for (std::size_t t = 0; t <= q; ++t) {
    for (std::size_t j = 0; j < g; ++j) {
      if (sgn(s.technology[t][j]) < 0) {
        out.push_back("technology entry (" + std::to_string(t + 1) + "," + std::to_string(j + 1) +
                      ") is negative");
      }
    }
  }
  for (std::size_t j = 0; j < g; ++j) {
    if (sgn(s.permit_row()[j]) <= 0) {
      out.push_back("condition 1 violated: permit use a_{(q+1)j} must be > 0 for good " +
                    std::to_string(j + 1));
    }
  }
  bool some_row_covers_all = false;
  for (std::size_t t = 0; t < q && !some_row_covers_all; ++t) {
    bool covers = true;
    for (std::size_t j = 0; j < g; ++j) covers = covers && sgn(s.technology[t][j]) > 0;
    some_row_covers_all = covers;
  }
  if (!some_row_covers_all) {
    out.push_back("condition 1 violated: no resource row t with a_{tj} > 0 for every good");
  }
  for (std::size_t t = 0; t < q; ++t) {
    bool held = false;
    for (std::size_t i = 0; i < s.num_firms(); ++i) {
      if (sgn(s.endowments[t][i]) < 0) {
        out.push_back("endowment of resource " + std::to_string(t + 1) + " for firm " +
                      std::to_string(i + 1) + " is negative");
      }
      held = held || sgn(s.endowments[t][i]) > 0;
    }
    if (!held) {
      out.push_back("condition 2 violated: no firm holds a positive amount of resource " +
                    std::to_string(t + 1));
    }
  }
  if (sgn(s.tax) <= 0) {
    out.push_back("condition 3 violated: tax c = " + to_fraction_string(s.tax) + " must be > 0");
  }
  if (sgn(s.cap) <= 0) {
    out.push_back("condition 3 violated: cap r = " + to_fraction_string(s.cap) + " must be > 0");
  }
  for (std::size_t j = 0; j < g; ++j) {
    if (!(s.prices[j] > s.permit_row()[j] * s.tax)) {
      out.push_back("condition 4 violated: price condition p_j > a_{(q+1)j} c fails for good " +
                    std::to_string(j + 1));
    }
  }
  return out;
}

void validate(const LppSituation& situation) {
  check_dimensions(situation);
  auto violations = condition_violations(situation);
  if (!violations.empty()) throw PreconditionError(violations.front());
}

namespace {

void check_coalition(const LppSituation& s, Coalition coalition) {
  if (coalition.empty()) throw StructuralError("coalition must be nonempty");
  if (!coalition.is_subset_of(Coalition::grand(s.num_firms()))) {
    throw StructuralError("coalition " + coalition.to_string() + " is not a subset of the " +
                          std::to_string(s.num_firms()) + " firms");
  }
}

}  // namespace

ProductionPlan optimal_plan(const LppSituation& s, Coalition coalition, const Rational& permits) {
  if (sgn(permits) < 0) {
    throw PreconditionError("permit holding must be >= 0, got " + to_fraction_string(permits));
  }
  check_coalition(s, coalition);
  const std::size_t q = s.num_resources();

  lp::LinearProgram program(s.num_goods());
  program.objective = s.prices;
  RationalVector pooled = s.resources_of(coalition);
  for (std::size_t t = 0; t < q; ++t) {
    program.add_constraint(s.technology[t], lp::Sense::kLessEqual, pooled[t]);
  }
  program.add_constraint(s.permit_row(), lp::Sense::kLessEqual, permits);

  lp::LpSolution solution = lp::solve(program);
  if (solution.status != lp::Status::kOptimal) {
    throw PreconditionError("production program for " + coalition.to_string() + " is " +
                            lp::to_string(solution.status));
  }
  ProductionPlan plan;
  plan.revenue = solution.objective_value;
  plan.profit = solution.objective_value - s.tax * permits;
  plan.quantities = std::move(solution.primal);
  plan.shadow_prices = std::move(solution.dual);
  return plan;
}

Rational coalition_value(const LppSituation& s, Coalition coalition, const Rational& permits) {
  return optimal_plan(s, coalition, permits).profit;
}

Rational optimal_demand(const LppSituation& s, Coalition coalition) {
  check_coalition(s, coalition);
  const std::size_t g = s.num_goods();
  const std::size_t q = s.num_resources();

  // Variables (x_1..x_g, z).
  lp::LinearProgram program(g + 1);
  for (std::size_t j = 0; j < g; ++j) program.objective[j] = s.prices[j];
  program.objective[g] = -s.tax;
  RationalVector pooled = s.resources_of(coalition);
  for (std::size_t t = 0; t < q; ++t) {
    RationalVector row = s.technology[t];
    row.push_back(0);
    program.add_constraint(std::move(row), lp::Sense::kLessEqual, pooled[t]);
  }
  RationalVector permit_row = s.permit_row();
  permit_row.push_back(-1);
  program.add_constraint(std::move(permit_row), lp::Sense::kLessEqual, 0);

  lp::LpSolution best = lp::solve(program);
  if (best.status != lp::Status::kOptimal) {
    throw PreconditionError("demand program for " + coalition.to_string() + " is " +
                            lp::to_string(best.status));
  }

  program.add_constraint(program.objective, lp::Sense::kEqual, best.objective_value);
  program.objective.assign(g + 1, Rational(0));
  program.objective[g] = -1;
  lp::LpSolution least = lp::solve(program);
  if (least.status != lp::Status::kOptimal) {
    throw PreconditionError("least-demand program for " + coalition.to_string() + " is " +
                            lp::to_string(least.status));
  }
  return least.primal[g];
}

RationalVector all_demands(const LppSituation& s) {
  RationalVector demands(std::size_t{1} << s.num_firms(), Rational(0));
  for (Coalition coalition : all_coalitions(s.num_firms())) {
    demands[coalition.mask()] = optimal_demand(s, coalition);
  }
  return demands;
}

namespace {

struct Support {
  Rational permits;
  Rational revenue;
  Rational slope;
};

Support support_at(const LppSituation& s, Coalition coalition, const Rational& permits) {
  ProductionPlan plan = optimal_plan(s, coalition, permits);
  return Support{permits, plan.revenue, plan.shadow_prices.back()};
}

// Sandwich refinement between two supporting lines of a concave function.
void refine(const LppSituation& s, Coalition coalition, const Support& left,
            const Support& right, std::vector<RevenuePoint>& out) {
  if (left.slope == right.slope) return;
  Rational meet = (right.revenue - left.revenue + left.slope * left.permits -
                   right.slope * right.permits) /
                  (left.slope - right.slope);
  if (meet <= left.permits || meet >= right.permits) return;
  Rational tangent_value = left.revenue + left.slope * (meet - left.permits);
  Support middle = support_at(s, coalition, meet);
  if (middle.revenue == tangent_value) {
    out.push_back(RevenuePoint{meet, middle.revenue});
    return;
  }
  refine(s, coalition, left, middle, out);
  out.push_back(RevenuePoint{middle.permits, middle.revenue});
  refine(s, coalition, middle, right, out);
}

}  // namespace

std::vector<RevenuePoint> revenue_curve(const LppSituation& s, Coalition coalition) {
  check_coalition(s, coalition);
  const std::size_t g = s.num_goods();
  const std::size_t q = s.num_resources();

  // Saturation: best revenue with unlimited permits, then the least permit
  // use attaining it.
  lp::LinearProgram program(g + 1);
  for (std::size_t j = 0; j < g; ++j) program.objective[j] = s.prices[j];
  RationalVector pooled = s.resources_of(coalition);
  for (std::size_t t = 0; t < q; ++t) {
    RationalVector row = s.technology[t];
    row.push_back(0);
    program.add_constraint(std::move(row), lp::Sense::kLessEqual, pooled[t]);
  }
  RationalVector permit_row = s.permit_row();
  permit_row.push_back(-1);
  program.add_constraint(std::move(permit_row), lp::Sense::kLessEqual, 0);
  lp::LpSolution best = lp::solve(program);
  if (best.status != lp::Status::kOptimal) {
    throw PreconditionError("revenue program for " + coalition.to_string() + " is " +
                            lp::to_string(best.status));
  }
  program.add_constraint(program.objective, lp::Sense::kEqual, best.objective_value);
  program.objective.assign(g + 1, Rational(0));
  program.objective[g] = -1;
  Rational saturation = lp::solve(program).primal[g];

  std::vector<RevenuePoint> out{RevenuePoint{0, 0}};
  if (sgn(saturation) == 0) return out;
  Support left = support_at(s, coalition, 0);
  Support right = support_at(s, coalition, saturation);
  refine(s, coalition, left, right, out);
  out.push_back(RevenuePoint{saturation, right.revenue});
  return out;
}

lp::LinearProgram grand_coalition_program(const LppSituation& s) {
  lp::LinearProgram program(s.num_goods());
  program.objective = s.prices;
  RationalVector pooled = s.resources_of(Coalition::grand(s.num_firms()));
  for (std::size_t t = 0; t < s.num_resources(); ++t) {
    program.add_constraint(s.technology[t], lp::Sense::kLessEqual, pooled[t]);
  }
  program.add_constraint(s.permit_row(), lp::Sense::kLessEqual, s.cap);
  return program;
}

}  // namespace permit_games
