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

#include <cmath>

#include "doctest.h"
#include "dppcount/error.h"
#include "dppcount/rational.h"

namespace dppcount {
namespace {

// Taylor partial sum; a lower bound on exp(q) for q >= 0.
Rational TaylorPartial(const Rational& q, int terms) {
  Rational sum = 0, term = 1;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term = term * q / (k + 1);
  }
  return sum;
}

TEST_SUITE("rational") {

TEST_CASE("parse and format") {
  CHECK(FormatRational(ParseRational("6/4")) == "3/2");
  CHECK(FormatRational(ParseRational("-6/4")) == "-3/2");
  CHECK(FormatRational(ParseRational("10/5")) == "2");
  CHECK(FormatRational(ParseRational("0/7")) == "0");
  CHECK(ParseRational("123456789012345678901234567890") ==
        Rational("123456789012345678901234567890"));
  for (const char* bad : {"", "1/0", "1.5", " 1", "1/", "/2", "a", "1/-2", "--1", "+1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseRational(bad), InvalidArgument);
  }
}

TEST_CASE("format round trip") {
  for (const char* text : {"0", "1", "-1", "7/3", "-22/7", "1/1000000000000000000000"}) {
    CHECK(FormatRational(ParseRational(text)) == text);
  }
}

TEST_CASE("decimal rounding is half to even") {
  CHECK(FormatDecimal(Rational(1, 8), 2) == "0.12");
  CHECK(FormatDecimal(Rational(3, 8), 2) == "0.38");
  CHECK(FormatDecimal(Rational(5, 2), 0) == "2");
  CHECK(FormatDecimal(Rational(7, 2), 0) == "4");
  CHECK(FormatDecimal(Rational(-1, 8), 2) == "-0.12");
  CHECK(FormatDecimal(Rational(2, 3), 4) == "0.6667");
  CHECK(FormatDecimal(Rational(7), 3) == "7.000");
}

TEST_CASE("pow, factorial, bit length") {
  CHECK(Pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Pow(Rational(5), 0) == 1);
  CHECK(Factorial(0) == 1);
  CHECK(Factorial(10) == 3628800);
  CHECK(BitLength(Rational(1)) == 2);
  CHECK(BitLength(Rational(255, 2)) == 10);
}

TEST_CASE("exp enclosure brackets exp") {
  for (const char* text : {"0", "1", "-1", "1/2", "-1/8", "3", "-7/3", "1/1000", "20"}) {
    CAPTURE(text);
    const Rational q = ParseRational(text);
    const ExpBounds e = ExpEnclosure(q, 128);
    CHECK(e.lower <= e.upper);
    const double reference = std::exp(q.get_d());
    CHECK(e.lower.get_d() <= reference * (1 + 1e-14));
    CHECK(e.upper.get_d() >= reference * (1 - 1e-14));
    CHECK(Rational((e.upper - e.lower) / e.upper).get_d() < 1e-30);
  }
  CHECK(ExpEnclosure(0).lower == 1);
  CHECK(ExpEnclosure(0).upper == 1);
}

TEST_CASE("exp enclosure against rational Taylor bounds") {
  // For q >= 0 every partial sum is below exp(q); the next partial sum plus
  // a geometric tail bounds it from above when q < 1.
  for (const char* text : {"1/2", "1/3", "3/4", "1/16"}) {
    CAPTURE(text);
    const Rational q = ParseRational(text);
    const ExpBounds e = ExpEnclosure(q, 200);
    const Rational partial = TaylorPartial(q, 40);
    CHECK(partial <= e.upper);
    CHECK(partial - e.lower > -Rational(1, 1) / Pow(Rational(2), 150));
    // exp(-q) = 1 / exp(q).
    const ExpBounds neg = ExpEnclosure(-q, 200);
    CHECK(neg.lower * e.upper >= Rational(1) - Rational(1) / Pow(Rational(2), 190));
    CHECK(neg.lower <= 1 / e.lower);
    CHECK(neg.upper >= 1 / e.upper);
  }
}

TEST_CASE("compare with scaled exp") {
  CHECK(CompareWithScaledExp(3, 0, 3) == 0);
  CHECK(CompareWithScaledExp(2, Rational(1, 4), 2) < 0);
  CHECK(CompareWithScaledExp(Rational(257, 100), 1, 1) < 0);   // e > 2.57
  CHECK(CompareWithScaledExp(Rational(272, 100), 1, 1) > 0);   // e < 2.72
  // Tight: a dyadic just under e*10 must still be decided.
  const Rational near = ExpEnclosure(1, 400).lower * 10;
  CHECK(CompareWithScaledExp(near, 1, 10) < 0);
  CHECK(CompareWithScaledExp(ExpEnclosure(-1, 400).upper, -1, 1) > 0);
}

}  // TEST_SUITE

}  // namespace
}  // namespace dppcount
