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

#ifndef PERMIT_GAMES_REPRODUCE_HPP
#define PERMIT_GAMES_REPRODUCE_HPP

#include <string>
#include <vector>

namespace permit_games {

// One comparison between a published figure and the computed one.
struct ReproductionCheck {
  std::string example;  // "Example 3"
  std::string item;     // "V^CEA({1}|{{1},{2,3}})"
  std::string expected;
  std::string actual;
  bool ok = false;
  // Extra context for mismatches.
  std::string note;
};

// Recomputes the published worked examples on the three-firm economy
// (Examples 3, 5, 6, 9 and 14) and compares them with embedded figures.
// Decimal figures are compared at two digits after rounding the exact
// result; integers, fractions and verdicts are compared exactly.
std::vector<ReproductionCheck> reproduce_examples();

}  // namespace permit_games

#endif  // PERMIT_GAMES_REPRODUCE_HPP
