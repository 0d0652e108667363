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

#include "umbral/combinatorics.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "brute.hpp"
#include "umbral/error.hpp"

namespace umbral {
namespace {

TEST(Combinatorics, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  for (long n = 0; n <= 15; ++n) {
    for (long k = -1; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), brute::choose(n, k)) << n << "," << k;
  }
}

TEST(Combinatorics, BinomialWithNegativeUpperIndex) {
  // C(-n, k) = (-1)^k C(n+k-1, k)
  for (long n = 1; n <= 6; ++n) {
    for (long k = 0; k <= 6; ++k) {
      const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
      EXPECT_EQ(binomial(-n, k), sign * brute::choose(n + k - 1, k));
    }
  }
}

TEST(Combinatorics, FallingFactorial) {
  EXPECT_EQ(falling_factorial(Rational(5), 3), Rational(60));
  EXPECT_EQ(falling_factorial(Rational(1, 2), 2), Rational(-1, 4));
  EXPECT_EQ(falling_factorial(Rational(7), 0), Rational(1));
}

TEST(Combinatorics, PartialBellOfOnesAreStirling2) {
  const auto s2 = brute::set_partitions(9);
  const std::vector<Rational> ones(12, Rational(1));
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(bell_partial(n, i, ones), Rational(s2[n][i])) << n << "," << i;
  }
}

TEST(Combinatorics, PartialBellRowSumsAreBellNumbers) {
  const std::vector<Rational> ones(13, Rational(1));
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};
  for (std::size_t n = 0; n <= 12; ++n) {
    Rational s;
    for (std::size_t i = 0; i <= n; ++i) s += bell_partial(n, i, ones);
    EXPECT_EQ(s, Rational(bell[n])) << n;
  }
}

TEST(Combinatorics, PartialBellFactorialsAreLah) {
  // a_j = j! gives the unsigned Lah numbers C(n-1, i-1) n!/i!.
  std::vector<Rational> a;
  for (std::size_t j = 1; j <= 8; ++j) a.push_back(brute::factorial(j));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational lah = brute::choose(static_cast<long>(n) - 1, static_cast<long>(i) - 1) * brute::factorial(n) /
                           brute::factorial(i);
      EXPECT_EQ(bell_partial(n, i, a), lah);
    }
  }
}

TEST(Combinatorics, PartialBellNeedsEnoughInput) {
  const std::vector<Rational> two{Rational(1), Rational(1)};
  EXPECT_THROW(bell_partial(5, 1, two), Error);
  EXPECT_EQ(bell_partial(3, 2, two), Rational(3));
}

}  // namespace
}  // namespace umbral
