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

#ifndef PERMIT_GAMES_LP_HPP
#define PERMIT_GAMES_LP_HPP

#include <optional>
#include <string>
#include <vector>

#include "permit_games/rational.hpp"

namespace permit_games::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string to_string(Status status);

// Variable bounds. A missing lower bound makes the variable free.
struct Bounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

// maximize objective . x  s.t.  matrix x (senses) rhs,  bounds on x.
struct LinearProgram {
  RationalVector objective;
  RationalMatrix matrix;
  RationalVector rhs;
  std::vector<Sense> senses;
  // Either empty (every variable in [0, inf)) or one entry per variable.
  std::vector<Bounds> bounds;

  explicit LinearProgram(std::size_t num_variables = 0)
      : objective(num_variables, Rational(0)) {}

  std::size_t num_variables() const { return objective.size(); }
  std::size_t num_constraints() const { return matrix.size(); }

  void add_constraint(RationalVector row, Sense sense, Rational rhs_value);
  void set_bounds(std::size_t variable, Bounds b);

  // Throws StructuralError when row, rhs, sense or bound counts disagree.
  void validate() const;
};

// Sign convention for `dual` on an optimal solve: y_i >= 0 for <= rows,
// y_i <= 0 for >= rows, free for = rows. With default bounds the dual
// objective rhs . y equals objective_value exactly.
//
// On an infeasible solve `dual` holds a Farkas ray with the same sign
// convention: y^T A >= 0 on nonnegative columns, = 0 on free columns, and
// rhs . y < 0. The ray is only meaningful for LPs whose bounds are all
// either [0, inf) or free.
struct LpSolution {
  Status status = Status::kInfeasible;
  Rational objective_value;
  RationalVector primal;
  RationalVector dual;
  std::size_t pivots = 0;
};

// Two-phase dense tableau simplex with Bland's least-index rule.
LpSolution solve(const LinearProgram& program);

}  // namespace permit_games::lp

#endif  // PERMIT_GAMES_LP_HPP
