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

// Test-only reference values, computed by enumeration or textbook closed
// forms. Nothing here uses Series, Umbra or the library oracles.

#ifndef UMBRAL_TESTS_BRUTE_HPP
#define UMBRAL_TESTS_BRUTE_HPP

#include <cstddef>
#include <vector>

#include "umbral/rational.hpp"

namespace brute {

using umbral::Rational;
using Coeffs = std::vector<Rational>;

/// counts[n][k] = number of partitions of an n-set into k blocks, n <= max_n,
/// by enumerating restricted growth strings.
std::vector<std::vector<long>> set_partitions(std::size_t max_n);

/// counts[n][k] = number of permutations of n letters with k cycles.
std::vector<std::vector<long>> permutation_cycles(std::size_t max_n);

/// Bernoulli numbers by the Akiyama-Tanigawa algorithm, with b_1 = -1/2.
Rational bernoulli(std::size_t n);

/// C(2n, n) / (n + 1).
Rational catalan(std::size_t n);

/// Plain n choose k with 0 outside 0 <= k <= n.
Rational choose(long n, long k);

Rational factorial(std::size_t n);

/// Coefficients of x (x-1) ... (x-n+1), constant term first.
Coeffs falling_factorial_poly(std::size_t n);

/// integral_0^1 x (x-1) ... (x-n+1) dx.
Rational cauchy_integral(std::size_t n);

/// [t^k] (1 + t)^x for rational x.
Rational binomial_series(const Rational& x, std::size_t k);

/// Truncated product of coefficient vectors (length = shorter input).
Coeffs mul(const Coeffs& a, const Coeffs& b);

/// Power of a coefficient vector with nonnegative exponent, kept at a's length.
Coeffs power(const Coeffs& a, std::size_t e);

/// Exponential generating function coefficients m_n / n!.
Coeffs egf(const std::vector<Rational>& moments);

/// n! [t^n] f_gamma(t) (t f_alpha(t))^k / k!, the exponential Riordan entry,
/// from plain coefficient convolutions. Moments must reach index n.
Rational exponential_entry(const std::vector<Rational>& gamma, const std::vector<Rational>& alpha, std::size_t n,
                           std::size_t k);

/// Bell numbers through sum_k S(n, k) of the enumerated set partitions.
Rational bell(std::size_t n);

}  // namespace brute

#endif  // UMBRAL_TESTS_BRUTE_HPP
