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

#include "permit_games/bankruptcy.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "permit_games/errors.hpp"

namespace permit_games {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::kConstrainedEqualAwards:
      return "CEA";
    case Rule::kConstrainedEqualLosses:
      return "CEL";
    case Rule::kProportional:
      return "PROP";
    case Rule::kTalmud:
      return "TAL";
  }
  return "?";
}

Rule parse_rule(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (Rule rule : kAllRules) {
    if (to_string(rule) == upper) return rule;
  }
  throw std::invalid_argument("unknown rule '" + std::string(text) +
                              "' (expected cea, cel, prop or tal)");
}

void check_problem(const BankruptcyProblem& problem) {
  if (sgn(problem.estate) < 0) {
    throw PreconditionError("estate must be >= 0, got " + to_fraction_string(problem.estate));
  }
  for (std::size_t i = 0; i < problem.claims.size(); ++i) {
    if (sgn(problem.claims[i]) < 0) {
      throw PreconditionError("claim " + std::to_string(i + 1) + " is negative");
    }
  }
  Rational total = sum(problem.claims);
  if (total < problem.estate) {
    throw PreconditionError("claims total " + to_fraction_string(total) +
                            " is below the estate " + to_fraction_string(problem.estate));
  }
}

namespace {

// Water level lambda with sum min(d_i, lambda) = estate, by walking the
// sorted claims. Assumes estate <= sum of claims.
RationalVector water_fill(const Rational& estate, const RationalVector& claims) {
  const std::size_t n = claims.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return claims[a] < claims[b]; });

  RationalVector award(claims);
  Rational remaining = estate;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& d = claims[order[k]];
    Rational unsatisfied = n - k;
    if (d * unsatisfied <= remaining) {
      remaining -= d;
      continue;
    }
    Rational level = remaining / unsatisfied;
    for (std::size_t rest = k; rest < n; ++rest) award[order[rest]] = level;
    break;
  }
  return award;
}

}  // namespace

RationalVector constrained_equal_awards(const BankruptcyProblem& problem) {
  check_problem(problem);
  return water_fill(problem.estate, problem.claims);
}

RationalVector constrained_equal_losses(const BankruptcyProblem& problem) {
  check_problem(problem);
  // Losses sum_i d_i - E are shared by constrained equal awards over claims.
  RationalVector losses = water_fill(sum(problem.claims) - problem.estate, problem.claims);
  RationalVector award(problem.claims);
  for (std::size_t i = 0; i < award.size(); ++i) award[i] -= losses[i];
  return award;
}

RationalVector proportional(const BankruptcyProblem& problem) {
  check_problem(problem);
  Rational total = sum(problem.claims);
  RationalVector award(problem.claims.size(), Rational(0));
  if (sgn(total) == 0) return award;
  Rational ratio = problem.estate / total;
  for (std::size_t i = 0; i < award.size(); ++i) award[i] = ratio * problem.claims[i];
  return award;
}

RationalVector talmud(const BankruptcyProblem& problem) {
  check_problem(problem);
  BankruptcyProblem halved{problem.estate, problem.claims};
  for (auto& d : halved.claims) d /= 2;
  Rational half_total = sum(halved.claims);
  if (problem.estate <= half_total) return water_fill(problem.estate, halved.claims);

  halved.estate = problem.estate - half_total;
  RationalVector top = constrained_equal_losses(halved);
  for (std::size_t i = 0; i < top.size(); ++i) top[i] += halved.claims[i];
  return top;
}

RationalVector apply_rule(Rule rule, const BankruptcyProblem& problem) {
  switch (rule) {
    case Rule::kConstrainedEqualAwards:
      return constrained_equal_awards(problem);
    case Rule::kConstrainedEqualLosses:
      return constrained_equal_losses(problem);
    case Rule::kProportional:
      return proportional(problem);
    case Rule::kTalmud:
      return talmud(problem);
  }
  throw std::invalid_argument("unknown rule");
}

CharacteristicGame bankruptcy_game(const BankruptcyProblem& problem) {
  check_problem(problem);
  const std::size_t n = problem.num_claimants();
  CharacteristicGame game(n, "bankruptcy");
  for (Coalition coalition : all_coalitions(n)) {
    Rational left = problem.estate;
    for (std::size_t i = 0; i < n; ++i) {
      if (!coalition.contains(i)) left -= problem.claims[i];
    }
    game.set_value(coalition, sgn(left) > 0 ? left : Rational(0));
  }
  return game;
}

}  // namespace permit_games
