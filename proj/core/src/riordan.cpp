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

#include <algorithm>
#include <mutex>
#include <optional>
#include <utility>

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"

namespace umbral {

Triangle identity_triangle(std::size_t rows) {
  Triangle t(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    t[n].resize(n + 1);
    t[n][n] = Rational(1);
  }
  return t;
}

Triangle multiply(const Triangle& a, const Triangle& b) {
  const std::size_t rows = std::min(a.size(), b.size());
  Triangle out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    out[n].resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational s;
      for (std::size_t j = k; j <= n; ++j) {
        if (!a[n][j].is_zero() && !b[j][k].is_zero()) s += a[n][j] * b[j][k];
      }
      out[n][k] = std::move(s);
    }
  }
  return out;
}

// Column k is the umbra gamma + k.alpha; rows are filled in order.
struct RiordanArray::Memo {
  std::mutex mutex;
  std::vector<Umbra> columns;
  Triangle rows;
};

RiordanArray::RiordanArray(Umbra gamma, Umbra alpha, WeightSeq weights)
    : gamma_(std::move(gamma)), alpha_(std::move(alpha)), weights_(std::move(weights)),
      memo_(std::make_shared<Memo>()) {
  if (weights_(0) != Rational(1)) {
    throw Error(ErrorKind::invalid_weights, "weight sequence must start with c_0 = 1");
  }
}

Rational RiordanArray::entry(long n, long k) const {
  if (k < 0 || k > n) return Rational(0);
  const auto row = static_cast<std::size_t>(n);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  while (memo_->rows.size() <= row) {
    const std::size_t r = memo_->rows.size();
    memo_->columns.push_back(usum(gamma_, sdot(Rational(r), alpha_)));
    const Rational cr = weights_(static_cast<long>(r));
    std::vector<Rational> values(r + 1);
    for (std::size_t j = 0; j <= r; ++j) {
      const std::size_t d = r - j;
      values[j] = cr / weights_(static_cast<long>(j)) * memo_->columns[j].mgf(d).coeff(d);
    }
    memo_->rows.push_back(std::move(values));
  }
  return memo_->rows[row][static_cast<std::size_t>(k)];
}

Triangle RiordanArray::matrix(std::size_t rows) const {
  entry(static_cast<long>(rows), 0);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return Triangle(memo_->rows.begin(), memo_->rows.begin() + static_cast<long>(rows) + 1);
}

namespace {

void require_same_weights(const RiordanArray& a, const RiordanArray& b) {
  if (!(a.weights() == b.weights())) {
    throw Error(ErrorKind::weight_mismatch,
                "arrays have different weights (" + a.weights().describe() + " vs " + b.weights().describe() + ")");
  }
}

}  // namespace

RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) {
  require_same_weights(a, b);
  const Umbra d_alpha = deriv(a.alpha());
  return RiordanArray(usum(a.gamma(), compose(b.gamma(), d_alpha)), usum(a.alpha(), compose(b.alpha(), d_alpha)),
                      a.weights());
}

RiordanArray inverse(const RiordanArray& a) {
  return RiordanArray(lagrange(a.gamma(), a.alpha()), lagrange(a.alpha()), a.weights());
}

std::vector<Rational> apply(const RiordanArray& a, const Umbra& eta, std::size_t count) {
  std::vector<Rational> out(count);
  if (count == 0) return out;
  const auto em = eta.moments(count - 1);
  for (std::size_t n = 0; n < count; ++n) {
    Rational s;
    for (std::size_t k = 0; k <= n; ++k) s += a.entry(static_cast<long>(n), static_cast<long>(k)) * em[k];
    out[n] = std::move(s);
  }
  return out;
}

std::vector<Rational> apply_closed_form(const RiordanArray& a, const Umbra& eta, std::size_t count) {
  std::vector<Rational> out(count);
  if (count == 0) return out;
  const Umbra image = usum(a.gamma(), compose(had(a.weights().omega(), eta), deriv(a.alpha())));
  const auto m = image.moments(count - 1);
  for (std::size_t n = 0; n < count; ++n) out[n] = a.weights()(static_cast<long>(n)) / factorial(n) * m[n];
  return out;
}

Rational row_sum(const RiordanArray& a, std::size_t n) {
  Rational s;
  for (std::size_t k = 0; k <= n; ++k) s += a.entry(static_cast<long>(n), static_cast<long>(k));
  return s;
}

Rational row_sum_closed_form(const RiordanArray& a, std::size_t n) {
  const Umbra image = usum(a.gamma(), compose(a.weights().omega(), deriv(a.alpha())));
  return a.weights()(static_cast<long>(n)) / factorial(n) * image.moment(n);
}

Polynomial sheffer(const RiordanArray& a, std::size_t n) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a.entry(static_cast<long>(n), static_cast<long>(k));
  return Polynomial(std::move(c));
}

Polynomial umbral_composition(const RiordanArray& a, const RiordanArray& b, std::size_t n) {
  require_same_weights(a, b);
  Polynomial acc;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational r = a.entry(static_cast<long>(n), static_cast<long>(k));
    if (!r.is_zero()) acc += sheffer(b, k) * r;
  }
  return acc;
}

RiordanArray subgroup(Subgroup kind, const Umbra& u, const WeightSeq& weights) {
  switch (kind) {
    case Subgroup::appell: return RiordanArray(u, Umbra::augmentation(), weights);
    case Subgroup::associated: return RiordanArray(Umbra::augmentation(), u, weights);
    case Subgroup::bell: return RiordanArray(u, u, weights);
  }
  throw Error(ErrorKind::invalid_argument, "unknown subgroup");
}

Rational a_sequence(const RiordanArray& a, long m, std::size_t i) {
  return sdot(Rational(m), kappa(a.alpha())).moment(i);
}

}  // namespace umbral
