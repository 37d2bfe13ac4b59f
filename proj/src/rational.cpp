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

#include "permit_games/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace permit_games {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) malformed(text);
    mpz_class den{std::string(den_text), 10};
    if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    if (num.get_den() != 1) malformed(text);
    Rational q(num.get_num(), den);
    q.canonicalize();
    return q;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) malformed(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string digits;
  long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) malformed(text);
    if (!int_part.empty() && !all_digits(int_part)) malformed(text);
    if (!frac_part.empty() && !all_digits(frac_part)) malformed(text);
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) malformed(text);
    digits = std::string(s);
  }

  mpz_class num(digits, 10);
  mpz_class den = 1;
  long shift = exponent - frac_len;
  if (shift >= 0) {
    num *= pow10(static_cast<unsigned long>(shift));
  } else {
    den = pow10(static_cast<unsigned long>(-shift));
  }
  if (negative) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int precision) {
  if (precision < 0) precision = 0;
  mpz_class scale = pow10(static_cast<unsigned long>(precision));
  Rational scaled = value * scale;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational frac = scaled - Rational(q);
  Rational half(1, 2);
  if (frac > half || (frac == half && mpz_odd_p(q.get_mpz_t()))) q += 1;

  bool negative = q < 0;
  if (negative) q = -q;
  std::string body = q.get_str();
  if (precision > 0) {
    if (body.size() <= static_cast<std::size_t>(precision)) {
      body.insert(0, static_cast<std::size_t>(precision) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(precision), ".");
  }
  return negative ? "-" + body : body;
}

Rational sum(const RationalVector& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace permit_games
