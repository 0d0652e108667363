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

#include <cctype>
#include <ostream>

#include "umbral/error.hpp"

namespace umbral {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::insufficient_input: return "insufficient-input-length";
    case ErrorKind::non_invertible_series: return "division-by-noninvertible-series";
    case ErrorKind::domain_violation: return "domain-violation";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::out_of_order_range: return "out-of-order-range";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::bad_constant_term: return "bad-constant-term";
    case ErrorKind::beyond_given_order: return "beyond-given-order";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_weights: return "invalid-weights";
    case ErrorKind::weight_mismatch: return "weight-mismatch";
    case ErrorKind::guard_violation: return "guard-violation";
    case ErrorKind::index_violation: return "index-violation";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::evaluation_error: return "evaluation-error";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) {
    throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(ErrorKind::invalid_argument, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (sgn(d) == 0) {
    throw Error(ErrorKind::division_by_zero, "rational with zero denominator: '" + std::string(text) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

bool Rational::is_integer() const noexcept { return value_.get_den() == 1; }

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::division_by_zero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw Error(ErrorKind::division_by_zero, "zero to a negative power");
    return Rational(1) / pow(x, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.value().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.value().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

}  // namespace umbral
