// Copyright 2026 The Authors.
//
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

#ifndef DPPCOUNT_RATIONAL_H_
#define DPPCOUNT_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace dppcount {

// Exact rationals and integers. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as every constructor from raw
// numerator/denominator pairs is followed by canonicalize(); the helpers
// below take care of that.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). No whitespace,
// no decimal points. Throws InvalidArgument on anything else.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string FormatRational(const Rational& value);

// Decimal rendering with `digits` fractional digits, rounding half to even.
std::string FormatDecimal(const Rational& value, int digits);

// Bit length of |numerator| + bit length of denominator; a size measure for
// reports.
std::size_t BitLength(const Rational& value);

Rational Pow(const Rational& base, unsigned long exponent);

// Exact sign-safe factorial.
Integer Factorial(unsigned long n);

// Enclosure [lower, upper] of exp(q) with lower <= exp(q) <= upper and
// upper - lower <= 2^-bits * max(1, exp(q)) (roughly). Both ends are dyadic
// rationals, so their size stays bounded by `bits`.
struct ExpBounds {
  Rational lower;
  Rational upper;
};
ExpBounds ExpEnclosure(const Rational& q, unsigned bits = 256);

// Three-way comparison of `value` against exp(q) * scale for scale > 0.
// Exact: refines the enclosure until the answer is decided. Returns -1, 0
// or +1. Equality only happens for q == 0 (exp of a nonzero rational is
// irrational).
int CompareWithScaledExp(const Rational& value, const Rational& q,
                         const Rational& scale);

}  // namespace dppcount

#endif  // DPPCOUNT_RATIONAL_H_
