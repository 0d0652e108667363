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

#include <string>
#include <vector>

#include "umbral/error.hpp"

namespace umbral {

Rational factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  // mpz_bin_ui handles negative n via C(-n, k) = (-1)^k C(n+k-1, k).
  mpz_class r;
  mpz_class top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

Rational falling_factorial(const Rational& x, std::size_t n) {
  Rational acc(1);
  Rational term = x;
  for (std::size_t i = 0; i < n; ++i) {
    acc *= term;
    term -= Rational(1);
  }
  return acc;
}

Rational bell_partial(std::size_t n, std::size_t i, std::span<const Rational> a) {
  if (i > n) return Rational(0);
  if (i == 0) return Rational(n == 0 ? 1 : 0);
  const std::size_t needed = n - i + 1;
  if (a.size() < needed) {
    throw Error(ErrorKind::insufficient_input,
                "bell_partial(" + std::to_string(n) + ", " + std::to_string(i) + ") needs " +
                    std::to_string(needed) + " values, got " + std::to_string(a.size()));
  }
  // table[m][j] = B_{m,j} for m <= n, j <= i.
  std::vector<std::vector<Rational>> table(n + 1, std::vector<Rational>(i + 1));
  table[0][0] = Rational(1);
  for (std::size_t j = 1; j <= i; ++j) {
    // Only rows m <= n - (i - j) feed B_{n,i}; this keeps q <= n - i + 1.
    for (std::size_t m = j; m + (i - j) <= n; ++m) {
      Rational sum;
      for (std::size_t q = 1; q + (j - 1) <= m; ++q) {
        const Rational& prev = table[m - q][j - 1];
        if (prev.is_zero()) continue;
        sum += binomial(static_cast<long>(m) - 1, static_cast<long>(q) - 1) * a[q - 1] * prev;
      }
      table[m][j] = std::move(sum);
    }
  }
  return table[n][i];
}

}  // namespace umbral
