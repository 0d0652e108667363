// Copyright 2026 The Umbral Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umbral/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "umbral/error.hpp"
#include "umbral/random.hpp"

namespace umbral {
namespace {

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(3, 4) * Rational(2, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1) / Rational(3) * Rational(3), Rational(1));
  EXPECT_EQ(-Rational(2, 5), Rational(-2, 5));
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(0).str(), "0");
  std::ostringstream os;
  os << Rational(-1, 30);
  EXPECT_EQ(os.str(), "-1/30");
}

TEST(Rational, ParseReducesAndRoundTrips) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("3/-6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  InstanceGenerator gen(3);
  for (int i = 0; i < 200; ++i) {
    const Rational r = gen.rational() / gen.nonzero_rational();
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse(""), Error);
  EXPECT_THROW(Rational::parse("1/"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rational, DivisionByZeroIsTyped) {
  try {
    Rational(1) / Rational(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
  }
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, IntegerQueries) {
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(Rational(1, 2).is_integer());
  EXPECT_EQ(Rational(-9, 3).to_long(), -3);
  EXPECT_FALSE(Rational(1, 2).to_long().has_value());
  EXPECT_EQ(Rational(-1, 2).sign(), -1);
}

TEST(Rational, PowHandlesNegativeExponents) {
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
  EXPECT_THROW(pow(Rational(0), -1), Error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

}  // namespace
}  // namespace umbral
