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

#ifndef UMBRAL_SERIES_HPP
#define UMBRAL_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
///
/// The order N is part of the value. Binary operations work at the minimum
/// of the operand orders, and asking for a coefficient past the order is an
/// error rather than an implicit zero.
class Series {
 public:
  /// `coeffs` must be non-empty; the order is coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs);
  Series(std::initializer_list<Rational> coeffs);

  static Series zero(std::size_t order);
  static Series constant(const Rational& c, std::size_t order);
  static Series one(std::size_t order) { return constant(Rational(1), order); }
  /// The series t (requires order >= 1 to be meaningful; order 0 gives 0).
  static Series identity(std::size_t order);
  static Series monomial(const Rational& c, std::size_t degree, std::size_t order);

  /// Parses the comma-separated text form, lowest degree first.
  static Series parse(std::string_view text);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// [t^n] of the series; throws out_of_order_range when n > order().
  const Rational& coeff(std::size_t n) const;

  /// Same series known to a lower order.
  Series truncate(std::size_t order) const;

  /// Formal derivative; the result is known to order() - 1 (order 0 stays 0).
  Series derivative() const;
  /// Antiderivative with zero constant term; known to order() + 1.
  Series integral() const;
  /// Multiply by t^k; known to order() + k.
  Series shift_up(std::size_t k) const;
  /// Divide by t^k; the first k coefficients must vanish. Known to order() - k.
  Series shift_down(std::size_t k) const;

  std::string str() const;

  Series operator-() const;
  Series& operator*=(const Rational& c);

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  /// Throws non_invertible_series when b(0) == 0.
  friend Series operator/(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// 1/a; throws non_invertible_series when a(0) == 0.
Series reciprocal(const Series& a);

/// exp(a); requires a(0) == 0 (domain_violation otherwise).
Series exp(const Series& a);

/// log(a); requires a(0) == 1 (domain_violation otherwise).
Series log(const Series& a);

/// a^x. Integer exponents use binary powering (negative ones need a(0) != 0);
/// other exponents go through exp(x log a) and need a(0) == 1.
Series pow(const Series& a, const Rational& x);
Series pow(const Series& a, long x);

/// f(g(t)) by Horner's rule at order min(f, g); requires g(0) == 0.
Series compose(const Series& f, const Series& g);

/// Compositional inverse h with g(h(t)) = t = h(g(t)).
///
/// Requires g(0) == 0 and g'(0) != 0 (not_invertible otherwise). Uses Newton
/// iteration, doubling the number of correct coefficients per step.
Series revert(const Series& g);

}  // namespace umbral

#endif  // UMBRAL_SERIES_HPP
