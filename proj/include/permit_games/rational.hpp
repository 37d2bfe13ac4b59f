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

#ifndef PERMIT_GAMES_RATIONAL_HPP
#define PERMIT_GAMES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace permit_games {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(long num, long den = 1);

// Parses "12", "-3", "0.125", "1.5e3", "50/3". Decimal strings are read as
// exact base-10 rationals. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// "50/3", "20", "-7/2".
std::string to_fraction_string(const Rational& value);

// Decimal rendering with round-half-even at the given number of digits.
std::string to_decimal_string(const Rational& value, int precision = 2);

Rational sum(const RationalVector& values);

}  // namespace permit_games

#endif  // PERMIT_GAMES_RATIONAL_HPP
