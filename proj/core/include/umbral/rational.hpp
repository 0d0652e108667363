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

#ifndef UMBRAL_RATIONAL_HPP
#define UMBRAL_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbral {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_class. Values are immutable from the outside; every
/// arithmetic operator returns a new canonical value. Division by zero throws
/// Error(ErrorKind::division_by_zero).
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(from_integral(value)) {}  // NOLINT(implicit)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses the canonical text form "p" or "p/q". Non-canonical but valid
  /// input such as "2/4" or "3/-6" is accepted and reduced.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept;
  int sign() const noexcept { return sgn(value_); }

  /// The value as a long when it is an integer that fits, else nullopt.
  std::optional<long> to_long() const;

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// Canonical text: "p/q" with q > 1, or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  template <std::integral I>
  static mpq_class from_integral(I value) {
    if constexpr (std::is_signed_v<I> && sizeof(I) <= sizeof(long)) {
      return mpq_class(static_cast<long>(value));
    } else if constexpr (!std::is_signed_v<I> && sizeof(I) <= sizeof(unsigned long)) {
      return mpq_class(static_cast<unsigned long>(value));
    } else {
      return mpq_class(std::to_string(value));
    }
  }

  mpq_class value_{0};
};

/// x^e for integer e; negative e requires x != 0.
Rational pow(const Rational& x, long e);

}  // namespace umbral

#endif  // UMBRAL_RATIONAL_HPP
