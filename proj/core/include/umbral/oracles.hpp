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

#ifndef UMBRAL_ORACLES_HPP
#define UMBRAL_ORACLES_HPP

#include <cstddef>
#include <span>
#include <string_view>

#include "umbral/rational.hpp"

// Classical sequences computed from their textbook recurrences only. Nothing
// here touches Series or Umbra, so these values can be used to check those
// layers.
namespace umbral::oracle {

/// Bell numbers via the Bell triangle.
Rational bell(std::size_t n);

/// Bernoulli numbers with b_1 = -1/2, from sum_{j=0}^{n} C(n+1, j) b_j = 0.
Rational bernoulli(std::size_t n);

/// Generalized Bernoulli numbers b_n^(k) = n! [t^n] (t/(e^t - 1))^k.
///
/// k > 0: k-fold binomial self-convolution of (b_j). k < 0: |k|-fold binomial
/// convolution of 1/(j+1), the moments of (e^t - 1)/t.
Rational bernoulli_gen(long k, std::size_t n);

/// Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1).
Rational stirling2(std::size_t n, std::size_t k);

/// Signed Stirling numbers of the first kind, s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
Rational stirling1(std::size_t n, std::size_t k);

/// Catalan numbers, C_{n+1} = sum_i C_i C_{n-i}.
Rational catalan(std::size_t n);

/// C_i^(m) = [t^i] C(t)^m by m-fold ordinary convolution. Negative m uses
/// C(t)^{-1} = 1 - t C(t).
Rational catalan_gen(long m, std::size_t i);

/// Cauchy numbers of the first type, integral_0^1 (x)_n dx = sum_k s(n,k)/(k+1).
Rational cauchy1(std::size_t n);

/// Generalized Cauchy numbers n! [t^n] (t/log(1+t))^m by m-fold binomial
/// convolution. Negative m convolves n! (-1)^n/(n+1), the moments of log(1+t)/t.
Rational cauchy1_gen(long m, std::size_t n);

/// Name-based dispatch: bell(n), bernoulli(n), bernoulli_gen(k, n),
/// stirling2(n, k), stirling1(n, k), catalan(n), catalan_gen(m, i),
/// cauchy1(n), cauchy1_gen(m, n). Throws unknown_name or index_violation.
Rational lookup(std::string_view name, std::span<const long> args);

}  // namespace umbral::oracle

#endif  // UMBRAL_ORACLES_HPP
