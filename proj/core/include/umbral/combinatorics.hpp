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

#ifndef UMBRAL_COMBINATORICS_HPP
#define UMBRAL_COMBINATORICS_HPP

#include <cstddef>
#include <span>

#include "umbral/rational.hpp"

namespace umbral {

Rational factorial(std::size_t n);

/// Generalized binomial coefficient. Zero for k < 0; for negative n and
/// k >= 0 it is n(n-1)...(n-k+1)/k!.
Rational binomial(long n, long k);

/// x(x-1)...(x-n+1); the empty product is 1.
Rational falling_factorial(const Rational& x, std::size_t n);

/// Partial exponential Bell polynomial B_{n,i}(a_1, ..., a_{n-i+1}).
///
/// `a[0]` holds a_1. Computed by the recurrence
///   B_{n,i} = sum_{j=1}^{n-i+1} C(n-1, j-1) a_j B_{n-j,i-1}
/// with B_{0,0} = 1 and B_{n,0} = 0 for n >= 1. Throws insufficient_input
/// when 1 <= i <= n and `a` holds fewer than n-i+1 values.
Rational bell_partial(std::size_t n, std::size_t i, std::span<const Rational> a);

}  // namespace umbral

#endif  // UMBRAL_COMBINATORICS_HPP
