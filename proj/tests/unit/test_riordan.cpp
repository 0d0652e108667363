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

#include "umbral/riordan.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "brute.hpp"
#include "umbral/catalog.hpp"
#include "umbral/error.hpp"
#include "umbral/random.hpp"

namespace umbral {
namespace {

const Umbra eps = Umbra::augmentation();
const WeightSeq kExp = WeightSeq::exponential();
const WeightSeq kOrd = WeightSeq::ordinary();

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// c_n/c_k [t^{n-k}] f_gamma f_alpha^k, with f the egf of the moments.
Rational entry_oracle(const RiordanArray& a, std::size_t n, std::size_t k) {
  const auto g = a.gamma().moments(n);
  const auto al = a.alpha().moments(n);
  const Rational scale =
      a.weights()(static_cast<long>(n)) / a.weights()(static_cast<long>(k)) * brute::factorial(k) / brute::factorial(n);
  return scale * brute::exponential_entry(g, al, n, k);
}

void expect_same_matrix(const RiordanArray& a, const RiordanArray& b, std::size_t rows) {
  EXPECT_EQ(a.matrix(rows), b.matrix(rows));
}

TEST(Riordan, NamedEntries) {
  EXPECT_EQ(named_array("pascal_exp").entry(4, 2), Rational(6));
  EXPECT_EQ(named_array("pascal_ord").entry(4, 2), Rational(6));
  EXPECT_EQ(named_array("stirling2").entry(4, 2), Rational(7));
  EXPECT_EQ(named_array("stirling1").entry(4, 2), Rational(11));
  EXPECT_EQ(named_array("stirling1").entry(4, 3), Rational(-6));
}

TEST(Riordan, EntriesAgainstEnumeration) {
  const auto s2 = brute::set_partitions(9);
  const auto s1 = brute::permutation_cycles(9);
  const RiordanArray st2 = named_array("stirling2");
  const RiordanArray st1 = named_array("stirling1");
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const long sign = (n - k) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(st2.entry(static_cast<long>(n), static_cast<long>(k)), Rational(s2[n][k]));
      EXPECT_EQ(st1.entry(static_cast<long>(n), static_cast<long>(k)), Rational(sign * s1[n][k]));
    }
  }
}

TEST(Riordan, OutsideTheTriangleIsZero) {
  const RiordanArray p = named_array("pascal_exp");
  EXPECT_EQ(p.entry(3, 4), Rational(0));
  EXPECT_EQ(p.entry(3, -1), Rational(0));
}

TEST(Riordan, Matrices) {
  const Triangle pascal{ints({1}), ints({1, 1}), ints({1, 2, 1})};
  EXPECT_EQ(named_array("pascal_exp").matrix(2), pascal);
  EXPECT_EQ(RiordanArray(eps, eps, kExp).matrix(5), identity_triangle(5));
  EXPECT_EQ(RiordanArray(eps, eps, kOrd).matrix(5), identity_triangle(5));
  const Triangle s2{ints({1}), ints({0, 1}), ints({0, 1, 1}), ints({0, 1, 3, 1})};
  EXPECT_EQ(named_array("stirling2").matrix(3), s2);
}

TEST(Riordan, ProductExamples) {
  const RiordanArray st2 = named_array("stirling2");
  const RiordanArray st1 = named_array("stirling1");
  EXPECT_EQ(multiply(st2, st1).matrix(8), identity_triangle(8));
  EXPECT_EQ(multiply(st1, st2).matrix(8), identity_triangle(8));
  expect_same_matrix(multiply(st2, RiordanArray(eps, eps, kExp)), st2, 8);
  const RiordanArray p = named_array("pascal_exp");
  EXPECT_EQ(multiply(p, p).matrix(8), multiply(p.matrix(8), p.matrix(8)));
}

TEST(Riordan, InverseExamples) {
  expect_same_matrix(inverse(named_array("stirling2")), named_array("stirling1"), 8);
  expect_same_matrix(inverse(named_array("stirling1")), named_array("stirling2"), 8);
  // Pascal inverse has entries (-1)^{n-k} C(n,k).
  const Triangle inv = inverse(named_array("pascal_ord")).matrix(7);
  for (long n = 0; n <= 7; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Rational sign = (n - k) % 2 == 0 ? Rational(1) : Rational(-1);
      EXPECT_EQ(inv[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)], sign * brute::choose(n, k));
    }
  }
}

TEST(Riordan, FundamentalTheoremExamples) {
  // Pascal sends u to 2^n, Stirling 2 sends u to Bell, Stirling 1 sends u to 1, 1, 0, ...
  const Umbra u = Umbra::unity();
  std::vector<Rational> two_n, bells;
  for (std::size_t n = 0; n < 10; ++n) {
    two_n.push_back(pow(Rational(2), static_cast<long>(n)));
    bells.push_back(brute::bell(n));
  }
  EXPECT_EQ(apply(named_array("pascal_exp"), u, 10), two_n);
  EXPECT_EQ(apply(named_array("stirling2"), u, 10), bells);
  std::vector<Rational> falling(10, Rational(0));
  falling[0] = falling[1] = Rational(1);
  EXPECT_EQ(apply(named_array("stirling1"), u, 10), falling);
  EXPECT_TRUE(apply(named_array("pascal_exp"), u, 0).empty());
}

TEST(Riordan, RowSums) {
  EXPECT_EQ(row_sum(named_array("stirling2"), 4), Rational(15));
  EXPECT_EQ(row_sum(named_array("pascal_ord"), 0), Rational(1));
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(row_sum(named_array("pascal_ord"), n), pow(Rational(2), static_cast<long>(n)));
    for (auto name : named_array_names()) {
      const RiordanArray a = named_array(name);
      EXPECT_EQ(row_sum(a, n), row_sum_closed_form(a, n)) << name << " " << n;
    }
  }
}

TEST(Riordan, ShefferSequences) {
  EXPECT_EQ(sheffer(named_array("stirling1"), 3), Polynomial(ints({0, 2, -3, 1})));
  EXPECT_EQ(sheffer(named_array("stirling2"), 2), Polynomial(ints({0, 1, 1})));
  // Falling factorials evaluated at integers count injections.
  const Polynomial f = sheffer(named_array("stirling1"), 4);
  EXPECT_EQ(f(Rational(6)), Rational(360));
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(sheffer(named_array("stirling1"), n), Polynomial(brute::falling_factorial_poly(n)));
  }
}

TEST(Riordan, UmbralCompositionOfInversePairIsMonomial) {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<Rational> mono(n + 1, Rational(0));
    mono[n] = Rational(1);
    EXPECT_EQ(umbral_composition(named_array("stirling2"), named_array("stirling1"), n), Polynomial(mono));
  }
}

TEST(Riordan, UmbralCompositionMatchesProductRows) {
  InstanceGenerator gen(21);
  for (int trial = 0; trial < 6; ++trial) {
    const WeightSeq w = gen.weights();
    const RiordanArray a = gen.array(w);
    const RiordanArray b = gen.array(w);
    const RiordanArray ab = multiply(a, b);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(umbral_composition(a, b, n), sheffer(ab, n));
  }
}

TEST(Riordan, SubgroupEntries) {
  InstanceGenerator gen(22);
  const Umbra g = gen.umbra();
  const RiordanArray appell = subgroup(Subgroup::appell, g, kExp);
  const RiordanArray assoc = subgroup(Subgroup::associated, g, kExp);
  const RiordanArray bell = subgroup(Subgroup::bell, g, kExp);
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= n; ++k) {
      const auto d = static_cast<std::size_t>(n - k);
      EXPECT_EQ(appell.entry(n, k), brute::choose(n, k) * g.moment(d));
      EXPECT_EQ(assoc.entry(n, k), brute::choose(n, k) * sdot(Rational(k), g).moment(d));
      EXPECT_EQ(bell.entry(n, k), brute::choose(n, k) * sdot(Rational(k + 1), g).moment(d));
    }
  }
}

TEST(Riordan, SubgroupClosureAndInverses) {
  InstanceGenerator gen(23);
  for (int trial = 0; trial < 4; ++trial) {
    const Umbra g = gen.umbra();
    const Umbra s = gen.umbra();
    const Umbra a = gen.umbra();
    const Umbra r = gen.umbra();
    expect_same_matrix(multiply(subgroup(Subgroup::appell, g, kExp), subgroup(Subgroup::appell, s, kExp)),
                       subgroup(Subgroup::appell, g + s, kExp), 8);
    expect_same_matrix(inverse(subgroup(Subgroup::appell, g, kExp)),
                       subgroup(Subgroup::appell, sdot(Rational(-1), g), kExp), 8);

    const Umbra ar = a + compose(r, deriv(a));
    expect_same_matrix(multiply(subgroup(Subgroup::associated, a, kExp), subgroup(Subgroup::associated, r, kExp)),
                       subgroup(Subgroup::associated, ar, kExp), 8);
    expect_same_matrix(inverse(subgroup(Subgroup::associated, a, kExp)),
                       subgroup(Subgroup::associated, lagrange(a), kExp), 8);

    const Umbra as = a + compose(s, deriv(a));
    expect_same_matrix(multiply(subgroup(Subgroup::bell, a, kExp), subgroup(Subgroup::bell, s, kExp)),
                       subgroup(Subgroup::bell, as, kExp), 8);
    expect_same_matrix(inverse(subgroup(Subgroup::bell, a, kExp)), subgroup(Subgroup::bell, lagrange(a), kExp), 8);
  }
}

TEST(Riordan, SubgroupActions) {
  InstanceGenerator gen(24);
  for (int trial = 0; trial < 4; ++trial) {
    const Umbra g = gen.umbra();
    const Umbra a = gen.umbra();
    const Umbra eta = gen.umbra();
    EXPECT_EQ(apply(subgroup(Subgroup::appell, g, kExp), eta, 9), (g + eta).moments(8));
    const Umbra assoc_image = compose(eta, deriv(a));
    EXPECT_EQ(apply(subgroup(Subgroup::associated, a, kExp), eta, 9), assoc_image.moments(8));
    EXPECT_EQ(apply(subgroup(Subgroup::bell, a, kExp), eta, 9), (a + assoc_image).moments(8));
  }
}

TEST(Riordan, Factorizations) {
  InstanceGenerator gen(25);
  for (int trial = 0; trial < 6; ++trial) {
    const WeightSeq w = gen.weights();
    const RiordanArray a = gen.array(w);
    expect_same_matrix(multiply(RiordanArray(a.gamma(), eps, w), RiordanArray(eps, a.alpha(), w)), a, 8);
    const RiordanArray appell(a.gamma() + sdot(Rational(-1), a.alpha()), eps, w);
    expect_same_matrix(multiply(appell, RiordanArray(a.alpha(), a.alpha(), w)), a, 8);
  }
}

TEST(Riordan, ASequence) {
  const RiordanArray st2 = named_array("stirling2");
  for (std::size_t i = 0; i <= 8; ++i) EXPECT_EQ(a_sequence(st2, 1, i), brute::cauchy_integral(i)) << i;
  const RiordanArray p = named_array("pascal_ord");
  EXPECT_EQ(a_sequence(p, 1, 0), Rational(1));
  EXPECT_EQ(a_sequence(p, 1, 1), Rational(1));
  for (std::size_t i = 2; i <= 6; ++i) EXPECT_EQ(a_sequence(p, 1, i), Rational(0));
  EXPECT_EQ(a_sequence(st2, 0, 0), Rational(1));
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(a_sequence(st2, 0, i), Rational(0));
}

class RandomArrays : public ::testing::TestWithParam<bool> {
 protected:
  WeightSeq weights() const { return GetParam() ? kExp : kOrd; }
};

TEST_P(RandomArrays, EntriesMatchTheGeneratingFunctionOracle) {
  InstanceGenerator gen(31, GetParam() ? 1 : 2);
  for (int trial = 0; trial < 5; ++trial) {
    const RiordanArray a = gen.array(weights());
    for (std::size_t n = 0; n <= 9; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        EXPECT_EQ(a.entry(static_cast<long>(n), static_cast<long>(k)), entry_oracle(a, n, k)) << n << "," << k;
      }
    }
  }
}

TEST_P(RandomArrays, Normalization) {
  InstanceGenerator gen(32, GetParam() ? 1 : 2);
  for (int trial = 0; trial < 5; ++trial) {
    const RiordanArray a = gen.array(weights());
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(a.entry(n, n), Rational(1));
  }
}

TEST_P(RandomArrays, SymbolicProductMatchesMatrixProduct) {
  InstanceGenerator gen(33, GetParam() ? 1 : 2);
  for (int trial = 0; trial < 5; ++trial) {
    const RiordanArray a = gen.array(weights());
    const RiordanArray b = gen.array(weights());
    EXPECT_EQ(multiply(a, b).matrix(8), multiply(a.matrix(8), b.matrix(8)));
  }
}

TEST_P(RandomArrays, InverseGivesIdentity) {
  InstanceGenerator gen(34, GetParam() ? 1 : 2);
  for (int trial = 0; trial < 5; ++trial) {
    const RiordanArray a = gen.array(weights());
    const RiordanArray inv = inverse(a);
    EXPECT_EQ(multiply(a, inv).matrix(8), identity_triangle(8));
    EXPECT_EQ(multiply(inv, a).matrix(8), identity_triangle(8));
    EXPECT_EQ(multiply(a.matrix(8), inv.matrix(8)), identity_triangle(8));
  }
}

TEST_P(RandomArrays, Associativity) {
  InstanceGenerator gen(35, GetParam() ? 1 : 2);
  for (int trial = 0; trial < 3; ++trial) {
    const RiordanArray a = gen.array(weights());
    const RiordanArray b = gen.array(weights());
    const RiordanArray c = gen.array(weights());
    expect_same_matrix(multiply(multiply(a, b), c), multiply(a, multiply(b, c)), 7);
  }
}

TEST_P(RandomArrays, FundamentalTheoremClosedForm) {
  InstanceGenerator gen(36, GetParam() ? 1 : 2);
  for (int trial = 0; trial < 5; ++trial) {
    const RiordanArray a = gen.array(weights());
    const Umbra eta = gen.umbra();
    EXPECT_EQ(apply(a, eta, 11), apply_closed_form(a, eta, 11));
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(row_sum(a, n), row_sum_closed_form(a, n));
  }
}

TEST_P(RandomArrays, ActionIsMultiplicative) {
  InstanceGenerator gen(37, GetParam() ? 1 : 2);
  const RiordanArray a = gen.array(weights());
  const RiordanArray b = gen.array(weights());
  const Umbra eta = gen.umbra();
  const auto be = apply(b, eta, 9);
  // A (B eta) computed directly on the vector.
  std::vector<Rational> abe(9);
  for (long n = 0; n < 9; ++n) {
    for (long k = 0; k <= n; ++k) abe[static_cast<std::size_t>(n)] += a.entry(n, k) * be[static_cast<std::size_t>(k)];
  }
  EXPECT_EQ(apply(multiply(a, b), eta, 9), abe);
}

INSTANTIATE_TEST_SUITE_P(Weights, RandomArrays, ::testing::Bool(),
                         [](const auto& info) { return info.param ? "exponential" : "ordinary"; });

TEST(Riordan, MixedWeightsAreRejected) {
  try {
    multiply(named_array("pascal_exp"), named_array("pascal_ord"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::weight_mismatch);
  }
  const WeightSeq custom = WeightSeq::from_omega(sdot(Rational(2), Umbra::unity()));
  const RiordanArray c(eps, Umbra::unity(), custom);
  EXPECT_THROW(umbral_composition(c, named_array("pascal_exp"), 3), Error);
}

TEST(Riordan, CustomWeights) {
  // c_n = n!/2^n scales entry (n,k) of the exponential array by 2^{k-n}.
  const WeightSeq custom = WeightSeq::from_omega(sdot(Rational(2), Umbra::unity()));
  const RiordanArray c(eps, sdot(Rational(-1), Umbra::bernoulli()), custom);
  const RiordanArray e = named_array("stirling2");
  for (long n = 0; n <= 7; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(c.entry(n, k), e.entry(n, k) * pow(Rational(2), k - n));
  }
  const Umbra eta = Umbra::bell();
  EXPECT_EQ(apply(c, eta, 8), apply_closed_form(c, eta, 8));
}

TEST(Riordan, CopiesShareTheCache) {
  const RiordanArray a = named_array("stirling2");
  const RiordanArray b = a;
  EXPECT_EQ(a.entry(6, 3), Rational(90));
  EXPECT_EQ(b.matrix(6), a.matrix(6));
}

TEST(Riordan, ConcurrentReaders) {
  const RiordanArray a = named_array("stirling1");
  const Triangle expected = named_array("stirling1").matrix(12);
  std::vector<std::thread> pool;
  std::vector<Triangle> seen(4);
  for (std::size_t t = 0; t < seen.size(); ++t) {
    pool.emplace_back([&, t] { seen[t] = a.matrix(12 - t); });
  }
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < seen.size(); ++t) {
    EXPECT_EQ(seen[t], Triangle(expected.begin(), expected.begin() + static_cast<long>(13 - t)));
  }
}

}  // namespace
}  // namespace umbral
