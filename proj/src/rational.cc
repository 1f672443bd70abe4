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

#include "dppcount/rational.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "dppcount/error.h"

namespace dppcount {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Rational FromFixed(const Integer& fixed, unsigned precision) {
  Rational out(fixed, 1);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), precision);
  return out;
}

// Fixed-point enclosure of exp(q) for 0 <= q, with `precision` fractional
// bits. Returns (lo, hi) scaled by 2^precision.
std::pair<Integer, Integer> ExpNonNegativeFixed(const Rational& q,
                                                unsigned precision) {
  // Halve the argument until it is at most 1/2, then square back.
  unsigned halvings = 0;
  Rational reduced = q;
  while (reduced > Rational(1, 2)) {
    mpq_div_2exp(reduced.get_mpq_t(), reduced.get_mpq_t(), 1);
    ++halvings;
  }
  const unsigned work = precision + halvings + 64;
  const Integer& a = reduced.get_num();
  const Integer& b = reduced.get_den();

  Integer one;
  mpz_ui_pow_ui(one.get_mpz_t(), 2, work);
  Integer lo_term = one;
  Integer hi_term = one;
  Integer lo_sum = one;
  Integer hi_sum = one;
  for (unsigned long k = 1;; ++k) {
    Integer denom = b * k;
    Integer t = lo_term * a;
    mpz_fdiv_q(lo_term.get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
    t = hi_term * a;
    mpz_cdiv_q(hi_term.get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
    lo_sum += lo_term;
    if (hi_term <= 1) {
      // Ratio of consecutive terms is at most q/(k+1) <= 1/2, so the
      // remaining tail is at most twice the current term.
      hi_sum += 2 * hi_term + 1;
      break;
    }
    hi_sum += hi_term;
  }
  for (unsigned i = 0; i < halvings; ++i) {
    Integer sq = lo_sum * lo_sum;
    mpz_fdiv_q_2exp(lo_sum.get_mpz_t(), sq.get_mpz_t(), work);
    sq = hi_sum * hi_sum;
    mpz_cdiv_q_2exp(hi_sum.get_mpz_t(), sq.get_mpz_t(), work);
  }
  // Drop the guard bits, rounding outward.
  const unsigned guard = work - precision;
  mpz_fdiv_q_2exp(lo_sum.get_mpz_t(), lo_sum.get_mpz_t(), guard);
  mpz_cdiv_q_2exp(hi_sum.get_mpz_t(), hi_sum.get_mpz_t(), guard);
  return {lo_sum, hi_sum};
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!AllDigits(num_text) || !AllDigits(den_text)) {
    throw InvalidArgument("malformed rational: \"" + std::string(text) + "\"");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) {
    throw InvalidArgument("zero denominator: \"" + std::string(text) + "\"");
  }
  if (negative) num = -num;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string FormatRational(const Rational& value) { return value.get_str(10); }

std::string FormatDecimal(const Rational& value, int digits) {
  if (digits < 0) throw InvalidArgument("negative decimal digit count");
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer num = abs(value.get_num()) * ten_pow;
  const Integer& den = value.get_den();
  Integer quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  const int cmp_half = cmp(2 * remainder, den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quotient.get_mpz_t()))) {
    quotient += 1;
  }
  std::string text = quotient.get_str(10);
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits)) {
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  if (value < 0 && quotient != 0) text.insert(0, "-");
  return text;
}

std::size_t BitLength(const Rational& value) {
  return mpz_sizeinbase(value.get_num_mpz_t(), 2) +
         mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

Rational Pow(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer Factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

ExpBounds ExpEnclosure(const Rational& q, unsigned bits) {
  if (q == 0) return {Rational(1), Rational(1)};
  if (q >= 0) {
    auto [lo, hi] = ExpNonNegativeFixed(q, bits);
    return {FromFixed(lo, bits), FromFixed(hi, bits)};
  }
  auto [lo, hi] = ExpNonNegativeFixed(-q, bits);
  // exp(q) = 1 / exp(-q); invert and round outward on the same grid.
  Integer one;
  mpz_ui_pow_ui(one.get_mpz_t(), 2, bits);
  const Integer sq = one * one;
  Integer inv_lo, inv_hi;
  mpz_fdiv_q(inv_lo.get_mpz_t(), sq.get_mpz_t(), hi.get_mpz_t());
  mpz_cdiv_q(inv_hi.get_mpz_t(), sq.get_mpz_t(), lo.get_mpz_t());
  return {FromFixed(inv_lo, bits), FromFixed(inv_hi, bits)};
}

int CompareWithScaledExp(const Rational& value, const Rational& q,
                         const Rational& scale) {
  if (scale <= 0) throw InvalidArgument("CompareWithScaledExp: scale <= 0");
  if (q == 0) return cmp(value, scale) < 0 ? -1 : (value == scale ? 0 : 1);
  for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
    const ExpBounds e = ExpEnclosure(q, bits);
    if (value < e.lower * scale) return -1;
    if (value > e.upper * scale) return 1;
  }
  throw Error("CompareWithScaledExp: comparison undecided at 65536 bits");
}

}  // namespace dppcount
