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

#ifndef UMBRAL_RIORDAN_HPP
#define UMBRAL_RIORDAN_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"
#include "umbral/weights.hpp"

namespace umbral {

/// Rows 0..N of a lower-triangular matrix; row n holds entries k = 0..n.
using Triangle = std::vector<std::vector<Rational>>;

Triangle identity_triangle(std::size_t rows);
/// Product of two lower-triangular matrices truncated to the shorter one.
Triangle multiply(const Triangle& a, const Triangle& b);

/// A normalized generalized Riordan array (gamma, alpha) with weights c_n:
///
///   entry(n, k) = (c_n / c_k) E[(gamma + k.alpha)^{n-k}] / (n-k)!
///
/// Entries are computed lazily and memoized; copies share the memo.
class RiordanArray {
 public:
  RiordanArray(Umbra gamma, Umbra alpha, WeightSeq weights);

  const Umbra& gamma() const noexcept { return gamma_; }
  const Umbra& alpha() const noexcept { return alpha_; }
  const WeightSeq& weights() const noexcept { return weights_; }

  /// Zero outside 0 <= k <= n.
  Rational entry(long n, long k) const;

  Triangle matrix(std::size_t rows) const;

 private:
  struct Memo;

  Umbra gamma_;
  Umbra alpha_;
  WeightSeq weights_;
  std::shared_ptr<Memo> memo_;
};

/// (gamma + sigma.beta.D(alpha), alpha + rho.beta.D(alpha)) for
/// A = (gamma, alpha), B = (sigma, rho). Throws weight_mismatch.
RiordanArray multiply(const RiordanArray& a, const RiordanArray& b);

/// (L_{gamma,alpha}, L_alpha) with the same weights.
RiordanArray inverse(const RiordanArray& a);

/// g_n = sum_k entry(n, k) eta_k for n = 0..count-1.
std::vector<Rational> apply(const RiordanArray& a, const Umbra& eta, std::size_t count);

/// The same sequence from the closed form
///   g_n = (c_n / n!) E[(gamma + had(omega, eta).beta.D(alpha))^n].
std::vector<Rational> apply_closed_form(const RiordanArray& a, const Umbra& eta, std::size_t count);

Rational row_sum(const RiordanArray& a, std::size_t n);
/// (c_n / n!) E[(gamma + omega.beta.D(alpha))^n].
Rational row_sum_closed_form(const RiordanArray& a, std::size_t n);

/// Row n as the polynomial sum_k entry(n, k) x^k.
Polynomial sheffer(const RiordanArray& a, std::size_t n);

/// sum_k A.entry(n, k) sheffer(B, k). Throws weight_mismatch.
Polynomial umbral_composition(const RiordanArray& a, const RiordanArray& b, std::size_t n);

enum class Subgroup { appell, associated, bell };

/// appell: (u, eps); associated: (eps, u); bell: (u, u).
RiordanArray subgroup(Subgroup kind, const Umbra& u, const WeightSeq& weights);

/// a_i^(m) = E[(m.K_alpha)^i], the generalized A-sequence of the array.
Rational a_sequence(const RiordanArray& a, long m, std::size_t i);

}  // namespace umbral

#endif  // UMBRAL_RIORDAN_HPP
