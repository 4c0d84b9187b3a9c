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

#ifndef AFPTAS_RATIONAL_HPP
#define AFPTAS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace afptas {

// Exact rational arithmetic for all item sizes, penalties, window sizes and
// feasibility checks. Strict inequalities in the pricing capacity and the
// final per-bin checks are decided exactly; doubles are used only inside the
// LP solver and for dual weights.
using Rational = mpq_class;

// Parses a plain decimal literal ("0.375", "1", ".5", "2.") into a canonical
// rational. Returns nullopt on malformed input.
std::optional<Rational> parse_decimal(const std::string& text);

// Renders exactly. Terminating decimal when the denominator is of the form
// 2^a 5^b, otherwise falls back to "num/den".
std::string to_decimal_string(const Rational& value);

// base^exp for integral exp (exp may be negative).
Rational pow_rational(const Rational& base, long exp);

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational rational_of(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// floor(value), value may be negative.
long floor_to_long(const Rational& value);

// Largest integer n with n < bound (strict) or n <= bound (non-strict).
// Used to turn a rational capacity into an integer budget on scaled sizes.
mpz_class integer_budget(const Rational& bound, bool strict);

}  // namespace afptas

#endif  // AFPTAS_RATIONAL_HPP
