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

#include "permit_games/lp.hpp"

#include <utility>

#include "permit_games/errors.hpp"

namespace permit_games::lp {

std::string to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

void LinearProgram::add_constraint(RationalVector row, Sense sense, Rational rhs_value) {
  matrix.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(rhs_value));
}

void LinearProgram::set_bounds(std::size_t variable, Bounds b) {
  if (variable >= num_variables()) {
    throw StructuralError("bound index " + std::to_string(variable) + " out of range");
  }
  if (bounds.empty()) bounds.assign(num_variables(), Bounds{});
  bounds[variable] = std::move(b);
}

void LinearProgram::validate() const {
  if (rhs.size() != matrix.size() || senses.size() != matrix.size()) {
    throw StructuralError("constraint count mismatch: " + std::to_string(matrix.size()) +
                          " rows, " + std::to_string(rhs.size()) + " rhs entries, " +
                          std::to_string(senses.size()) + " senses");
  }
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != objective.size()) {
      throw StructuralError("row " + std::to_string(i) + " has " +
                            std::to_string(matrix[i].size()) + " coefficients, expected " +
                            std::to_string(objective.size()));
    }
  }
  if (!bounds.empty() && bounds.size() != objective.size()) {
    throw StructuralError("bounds given for " + std::to_string(bounds.size()) +
                          " variables, expected " + std::to_string(objective.size()));
  }
}

namespace {

// Original variable j = shift + x[plus] - x[minus].
struct ColumnMap {
  std::size_t plus = 0;
  std::optional<std::size_t> minus;
  Rational shift = 0;
};

class Tableau {
 public:
  Tableau(RationalMatrix rows, std::vector<std::size_t> basis, std::vector<bool> artificial)
      : rows_(std::move(rows)),
        basis_(std::move(basis)),
        artificial_(std::move(artificial)),
        width_(artificial_.size()) {}

  // Runs Bland-rule simplex maximizing cost . x over columns not barred.
  // Returns false when unbounded.
  bool maximize(const RationalVector& cost, bool allow_artificial) {
    reset_objective(cost);
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!allow_artificial && artificial_[j]) continue;
        if (sgn(reduced_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    RationalVector& prow = rows_[r];
    Rational inv = 1 / prow[e];
    for (auto& v : prow) {
      if (sgn(v) != 0) v *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][e]) == 0) continue;
      Rational factor = rows_[i][e];
      RationalVector& row = rows_[i];
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
      }
    }
    if (!reduced_.empty() && sgn(reduced_[e]) != 0) {
      Rational factor = reduced_[e];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(prow[j]) != 0) reduced_[j] -= factor * prow[j];
      }
      value_ += factor * prow[width_];
    }
    basis_[r] = e;
  }

  // Pivots basic artificials at level zero out of the basis where a
  // non-artificial column is available. Rows with none left are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!artificial_[basis_[i]]) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!artificial_[j] && sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // c_B B^{-1} e_i, reading B^{-1} from the columns that started as identity.
  RationalVector duals(const RationalVector& cost,
                       const std::vector<std::size_t>& identity_column) const {
    RationalVector y(identity_column.size(), Rational(0));
    for (std::size_t i = 0; i < identity_column.size(); ++i) {
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& cb = cost[basis_[k]];
        if (sgn(cb) == 0) continue;
        const Rational& entry = rows_[k][identity_column[i]];
        if (sgn(entry) != 0) y[i] += cb * entry;
      }
    }
    return y;
  }

  RationalVector basic_solution() const {
    RationalVector x(width_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][width_];
    return x;
  }

  const Rational& value() const { return value_; }
  std::size_t pivots() const { return pivots_; }

 private:
  void reset_objective(const RationalVector& cost) {
    reduced_ = cost;
    value_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(rows_[i][j]) != 0) reduced_[j] -= cb * rows_[i][j];
      }
      value_ += cb * rows_[i][width_];
    }
  }

  RationalMatrix rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> artificial_;
  std::size_t width_;
  RationalVector reduced_;
  Rational value_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve(const LinearProgram& program) {
  program.validate();
  const std::size_t n = program.num_variables();
  const std::size_t m = program.num_constraints();

  std::vector<ColumnMap> columns(n);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Bounds b = program.bounds.empty() ? Bounds{} : program.bounds[j];
    columns[j].plus = structural++;
    if (b.lower) {
      columns[j].shift = *b.lower;
    } else {
      columns[j].minus = structural++;
    }
  }

  // Rows over the structural columns: the program's rows then upper bounds.
  struct Row {
    RationalVector coeffs;
    Sense sense;
    Rational rhs;
    bool flipped = false;
  };
  std::vector<Row> rows;
  rows.reserve(m + n);
  for (std::size_t i = 0; i < m; ++i) {
    Row row{RationalVector(structural, Rational(0)), program.senses[i], program.rhs[i]};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = program.matrix[i][j];
      if (sgn(a) == 0) continue;
      row.coeffs[columns[j].plus] += a;
      if (columns[j].minus) row.coeffs[*columns[j].minus] -= a;
      row.rhs -= a * columns[j].shift;
    }
    rows.push_back(std::move(row));
  }
  if (!program.bounds.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& upper = program.bounds[j].upper;
      if (!upper) continue;
      Row row{RationalVector(structural, Rational(0)), Sense::kLessEqual,
              *upper - columns[j].shift};
      row.coeffs[columns[j].plus] = 1;
      if (columns[j].minus) row.coeffs[*columns[j].minus] = -1;
      rows.push_back(std::move(row));
    }
  }
  for (auto& row : rows) {
    if (sgn(row.rhs) >= 0) continue;
    for (auto& a : row.coeffs) a = -a;
    row.rhs = -row.rhs;
    row.flipped = true;
    if (row.sense == Sense::kLessEqual) {
      row.sense = Sense::kGreaterEqual;
    } else if (row.sense == Sense::kGreaterEqual) {
      row.sense = Sense::kLessEqual;
    }
  }

  // Column layout: structural, then per row a slack, or surplus + artificial.
  std::size_t width = structural;
  std::vector<std::size_t> identity_column(rows.size());
  std::vector<std::pair<std::size_t, int>> extra_unit;  // (row, sign) per extra column
  std::vector<bool> artificial(structural, false);
  std::vector<std::size_t> basis(rows.size());
  bool needs_phase_one = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].sense == Sense::kGreaterEqual) {
      extra_unit.emplace_back(i, -1);
      artificial.push_back(false);
      ++width;
    }
    extra_unit.emplace_back(i, 1);
    bool is_artificial = rows[i].sense != Sense::kLessEqual;
    artificial.push_back(is_artificial);
    needs_phase_one = needs_phase_one || is_artificial;
    identity_column[i] = width;
    basis[i] = width;
    ++width;
  }

  RationalMatrix table(rows.size(), RationalVector(width + 1, Rational(0)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < structural; ++j) table[i][j] = rows[i].coeffs[j];
    table[i][width] = rows[i].rhs;
  }
  for (std::size_t k = 0; k < extra_unit.size(); ++k) {
    table[extra_unit[k].first][structural + k] = extra_unit[k].second;
  }

  Tableau tableau(std::move(table), std::move(basis), artificial);
  LpSolution solution;

  auto to_original_rows = [&](RationalVector y) {
    RationalVector out(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) out[i] = rows[i].flipped ? Rational(-y[i]) : y[i];
    return out;
  };

  if (needs_phase_one) {
    RationalVector phase_one_cost(width, Rational(0));
    for (std::size_t j = 0; j < width; ++j) {
      if (artificial[j]) phase_one_cost[j] = -1;
    }
    tableau.maximize(phase_one_cost, /*allow_artificial=*/true);
    if (sgn(tableau.value()) < 0) {
      solution.status = Status::kInfeasible;
      solution.dual = to_original_rows(tableau.duals(phase_one_cost, identity_column));
      solution.pivots = tableau.pivots();
      return solution;
    }
    tableau.drive_out_artificials();
  }

  RationalVector cost(width, Rational(0));
  Rational constant = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& c = program.objective[j];
    cost[columns[j].plus] = c;
    if (columns[j].minus) cost[*columns[j].minus] = -c;
    constant += c * columns[j].shift;
  }
  bool bounded = tableau.maximize(cost, /*allow_artificial=*/false);
  solution.pivots = tableau.pivots();
  if (!bounded) {
    solution.status = Status::kUnbounded;
    return solution;
  }

  solution.status = Status::kOptimal;
  solution.objective_value = tableau.value() + constant;
  RationalVector x = tableau.basic_solution();
  solution.primal.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    solution.primal[j] = columns[j].shift + x[columns[j].plus];
    if (columns[j].minus) solution.primal[j] -= x[*columns[j].minus];
  }
  solution.dual = to_original_rows(tableau.duals(cost, identity_column));
  return solution;
}

}  // namespace permit_games::lp
