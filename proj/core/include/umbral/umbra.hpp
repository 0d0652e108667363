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

#ifndef UMBRAL_UMBRA_HPP
#define UMBRAL_UMBRA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral {

namespace detail {
class UmbraNode;
}

/// An umbra, identified with its sequence of moments E[a^0], E[a^1], ...
///
/// An Umbra is a cheap handle to an immutable recipe (a primitive, a finite
/// list of moments, or an operator applied to child umbrae). Moments are
/// computed on demand through the moment generating function
/// f(t) = sum_n E[a^n] t^n / n! and memoized; the cache is internally
/// synchronized, so handles may be shared freely between threads.
///
/// Two umbrae are "similar" when their moments agree; similar() checks this
/// up to a given order.
class Umbra {
 public:
  /// epsilon: f(t) = 1.
  static Umbra augmentation();
  /// upsilon: f(t) = e^t.
  static Umbra unity();
  /// chi: f(t) = 1 + t.
  static Umbra singleton();
  /// beta: f(t) = exp(e^t - 1); moments are the Bell numbers.
  static Umbra bell();
  /// iota: f(t) = t / (e^t - 1); moments are the Bernoulli numbers.
  static Umbra bernoulli();
  /// boolean unity: f(t) = 1 / (1 - t); moments are n!.
  static Umbra boolean_unity();

  /// Looks up a primitive by its long name (eps, unity, singleton, bell,
  /// bernoulli, boolean_unity) or by its expression-language name (u, chi,
  /// bern, boolu). Throws unknown_name.
  static Umbra named(std::string_view name);

  /// delta^(k): f(t) = 1 + t^k / k!, k >= 1.
  static Umbra delta(long k);

  /// The scalar r viewed as an umbra: moments r^n, f(t) = e^{rt}.
  static Umbra scalar(const Rational& r);

  /// Finite-support umbrae. Moments past the supplied data are an error
  /// (beyond_given_order); the constant term must be 1 (bad_constant_term).
  static Umbra from_moments(std::vector<Rational> moments);
  static Umbra from_gf(std::vector<Rational> coeffs);

  Rational moment(std::size_t n) const;
  /// Moments 0..n inclusive.
  std::vector<Rational> moments(std::size_t n) const;
  /// Moment generating function known to the given order.
  Series mgf(std::size_t order) const;

  /// Expression-language text that rebuilds this umbra.
  std::string expr() const;

  /// Number of known moments minus one for finite-support recipes, or
  /// npos when every moment is computable.
  std::size_t max_order() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool same_recipe(const Umbra& other) const noexcept { return node_ == other.node_; }

  explicit Umbra(std::shared_ptr<const detail::UmbraNode> node);
  const detail::UmbraNode& node() const noexcept { return *node_; }

 private:
  std::shared_ptr<const detail::UmbraNode> node_;
};

/// Uncorrelated sum a + b: f = f_a f_b.
Umbra usum(const Umbra& a, const Umbra& b);
Umbra usum(std::initializer_list<Umbra> terms);
inline Umbra operator+(const Umbra& a, const Umbra& b) { return usum(a, b); }

/// x.a: f = f_a^x for any rational x.
Umbra sdot(const Rational& x, const Umbra& a);

/// g.a: f = f_g(log f_a).
Umbra udot(const Umbra& g, const Umbra& a);

/// The composition umbra s.beta.a: f = f_s(f_a - 1).
Umbra compose(const Umbra& s, const Umbra& a);

/// Moments multiply termwise.
Umbra had(const Umbra& g, const Umbra& a);

/// Derivative umbra D(a): moments n a_{n-1}, f = 1 + t f_a.
Umbra deriv(const Umbra& a);

/// Compositional inverse: f - 1 = (f_a - 1)^<-1>. Throws not_invertible
/// when a.moment(1) == 0.
Umbra cinv(const Umbra& a);

/// K_{s,a} = s.beta.D(a)^<-1>: f = f_s((t f_a)^<-1>).
Umbra kappa(const Umbra& s, const Umbra& a);
inline Umbra kappa(const Umbra& a) { return kappa(a, a); }

/// Lagrange involution L_{s,a} = (-1).K_{s,a}.
Umbra lagrange(const Umbra& s, const Umbra& a);
inline Umbra lagrange(const Umbra& a) { return lagrange(a, a); }

/// E[s (s + (-n).a)^{n-1}] expanded by uncorrelation (n >= 1):
///   sum_{j=0}^{n-1} C(n-1, j) s_{j+1} ((-n).a)^{n-1-j}.
/// Independent of the reversion route used by kappa().
Rational abel_moment(const Umbra& s, const Umbra& a, std::size_t n);

/// E[(g.a)^n] through partial Bell polynomials:
///   sum_i E[(g)_i] B_{n,i}(a_1, a_2, ...),
/// with the factorial moments E[(g)_i] obtained from g's moments through
/// signed Stirling numbers of the first kind.
Rational dot_via_bell(const Umbra& g, const Umbra& a, std::size_t n);

/// True when the moments of a and b agree for 0..order.
bool similar(const Umbra& a, const Umbra& b, std::size_t order);

}  // namespace umbral

#endif  // UMBRAL_UMBRA_HPP
