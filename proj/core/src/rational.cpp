// Copyright 2026 The Afptas Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "afptas/rational.hpp"

#include <cctype>

namespace afptas {

std::optional<Rational> parse_decimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    int_part.push_back(text[pos++]);
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      frac_part.push_back(text[pos++]);
    }
  }
  if (pos != text.size()) return std::nullopt;
  if (int_part.empty() && frac_part.empty()) return std::nullopt;

  mpz_class num(int_part.empty() ? std::string("0") : int_part, 10);
  for (char c : frac_part) {
    num *= 10;
    num += c - '0';
  }
  mpz_class den(1);
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_decimal_string(const Rational& value) {
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  bool negative = num < 0;
  if (negative) num = -num;

  // Strip factors of 2 and 5; a terminating decimal exists iff nothing is left.
  mpz_class d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    return value.get_str();
  }
  int digits = twos > fives ? twos : fives;
  mpz_class scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class scaled = num * scale / den;
  std::string s = scaled.get_str();
  std::string out;
  if (digits == 0) {
    out = s;
  } else {
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    // Trim trailing zeros but keep at least one fractional digit removed cleanly.
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (negative && out != "0") out.insert(out.begin(), '-');
  return out;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp < 0) {
    Rational inv = 1 / base;
    return pow_rational(inv, -exp);
  }
  Rational result(1);
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1UL;
  }
  return result;
}

long floor_to_long(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q.get_si();
}

mpz_class integer_budget(const Rational& bound, bool strict) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), bound.get_num().get_mpz_t(),
              bound.get_den().get_mpz_t());
  if (strict && r == 0) {
    q -= 1;
  }
  return q;
}

}  // namespace afptas
