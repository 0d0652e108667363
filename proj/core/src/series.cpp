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

#include "umbral/series.hpp"

#include <algorithm>
#include <utility>

#include "umbral/error.hpp"

namespace umbral {

namespace {

std::string order_message(std::size_t n, std::size_t order) {
  return "coefficient t^" + std::to_string(n) + " requested from a series known to order " +
         std::to_string(order);
}

std::vector<Rational> extended(std::span<const Rational> c, std::size_t order) {
  std::vector<Rational> out(order + 1);
  std::copy_n(c.begin(), std::min(c.size(), order + 1), out.begin());
  return out;
}

}  // namespace

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::invalid_argument, "a series needs at least one coefficient");
  }
}

Series::Series(std::initializer_list<Rational> coeffs) : Series(std::vector<Rational>(coeffs)) {}

Series Series::zero(std::size_t order) { return Series(std::vector<Rational>(order + 1)); }

Series Series::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return Series(std::move(v));
}

Series Series::identity(std::size_t order) { return monomial(Rational(1), 1, order); }

Series Series::monomial(const Rational& c, std::size_t degree, std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (degree <= order) v[degree] = c;
  return Series(std::move(v));
}

Series Series::parse(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Series(std::move(out));
}

const Rational& Series::coeff(std::size_t n) const {
  if (n > order()) throw Error(ErrorKind::out_of_order_range, order_message(n, order()));
  return coeffs_[n];
}

Series Series::truncate(std::size_t order) const {
  if (order > this->order()) {
    throw Error(ErrorKind::out_of_order_range, order_message(order, this->order()));
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

Series Series::derivative() const {
  if (order() == 0) {
    throw Error(ErrorKind::out_of_order_range, "derivative of a series known only to order 0");
  }
  std::vector<Rational> v(order());
  for (std::size_t n = 1; n <= order(); ++n) v[n - 1] = coeffs_[n] * Rational(n);
  return Series(std::move(v));
}

Series Series::integral() const {
  std::vector<Rational> v(order() + 2);
  for (std::size_t n = 0; n <= order(); ++n) v[n + 1] = coeffs_[n] / Rational(n + 1);
  return Series(std::move(v));
}

Series Series::shift_up(std::size_t k) const {
  std::vector<Rational> v(order() + k + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<long>(k));
  return Series(std::move(v));
}

Series Series::shift_down(std::size_t k) const {
  if (k > order()) throw Error(ErrorKind::out_of_order_range, order_message(k, order()));
  for (std::size_t n = 0; n < k; ++n) {
    if (!coeffs_[n].is_zero()) {
      throw Error(ErrorKind::domain_violation, "shift_down over a nonzero low coefficient");
    }
  }
  return Series(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

std::string Series::str() const {
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n) out += ',';
    out += coeffs_[n].str();
  }
  return out;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return Series(std::move(v));
}

Series operator-(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
  return Series(std::move(v));
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Series(std::move(v));
}

Series operator/(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  return a.truncate(n) * reciprocal(b.truncate(n));
}

Series reciprocal(const Series& a) {
  const Rational& a0 = a.coeff(0);
  if (a0.is_zero()) {
    throw Error(ErrorKind::non_invertible_series, "series with zero constant term is not invertible");
  }
  const Rational inv0 = Rational(1) / a0;
  const auto c = a.coeffs();
  std::vector<Rational> r(a.order() + 1);
  r[0] = inv0;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!c[k].is_zero()) s += c[k] * r[n - k];
    }
    r[n] = -s * inv0;
  }
  return Series(std::move(r));
}

Series exp(const Series& a) {
  if (!a.coeff(0).is_zero()) {
    throw Error(ErrorKind::domain_violation, "exp needs a series with zero constant term");
  }
  // b = exp(a) satisfies b' = a' b, i.e. n b_n = sum_k k a_k b_{n-k}.
  const auto c = a.coeffs();
  std::vector<Rational> b(a.order() + 1);
  b[0] = Rational(1);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!c[k].is_zero()) s += Rational(k) * c[k] * b[n - k];
    }
    b[n] = s / Rational(n);
  }
  return Series(std::move(b));
}

Series log(const Series& a) {
  if (a.coeff(0) != Rational(1)) {
    throw Error(ErrorKind::domain_violation, "log needs a series with constant term 1");
  }
  if (a.order() == 0) return Series::zero(0);
  return (a.derivative() / a).integral();
}

Series pow(const Series& a, long x) {
  if (x < 0) return pow(reciprocal(a), -x);
  Series result = Series::one(a.order());
  Series base = a;
  auto e = static_cast<unsigned long>(x);
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Series pow(const Series& a, const Rational& x) {
  if (auto n = x.to_long()) return pow(a, *n);
  if (a.coeff(0) != Rational(1)) {
    throw Error(ErrorKind::domain_violation, "non-integer power needs a series with constant term 1");
  }
  return exp(log(a) * x);
}

Series compose(const Series& f, const Series& g) {
  if (!g.coeff(0).is_zero()) {
    throw Error(ErrorKind::domain_violation, "compose needs an inner series with zero constant term");
  }
  const std::size_t n = std::min(f.order(), g.order());
  const Series inner = g.truncate(n);
  const auto fc = f.coeffs();
  Series acc = Series::constant(fc[n], n);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * inner;
    std::vector<Rational> v(acc.coeffs().begin(), acc.coeffs().end());
    v[0] += fc[i];
    acc = Series(std::move(v));
  }
  return acc;
}

Series revert(const Series& g) {
  if (g.order() < 1 || !g.coeff(0).is_zero() || g.coeff(1).is_zero()) {
    throw Error(ErrorKind::not_invertible, "revert needs g(0) = 0 and g'(0) != 0");
  }
  const std::size_t order = g.order();
  const Series dg = g.derivative();
  // h is correct through t^known.
  std::size_t known = 1;
  Series h = Series::monomial(Rational(1) / g.coeff(1), 1, 1);
  while (known < order) {
    const std::size_t next = std::min(2 * known + 1, order);
    const Series hq(extended(h.coeffs(), next));
    const Series residual = compose(g.truncate(next), hq) - Series::identity(next);
    const std::size_t valuation = known + 1;
    const std::size_t width = next - valuation;
    const Series slope = compose(dg.truncate(width), hq.truncate(width));
    const Series step = (residual.shift_down(valuation) / slope).shift_up(valuation);
    h = hq - step;
    known = next;
  }
  return h;
}

}  // namespace umbral
