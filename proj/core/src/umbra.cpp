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

#include "umbral/umbra.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <utility>

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"
#include "umbral/oracles.hpp"

namespace umbral {
namespace detail {

// Printing precedence for expr(): sums bind loosest, then dots.
enum class Prec { sum = 0, dot = 1, atom = 2 };

class UmbraNode {
 public:
  virtual ~UmbraNode() = default;

  Series mgf(std::size_t order) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (cache_ && cache_->order() >= order) return cache_->truncate(order);
    Series s = compute(order);
    cache_ = s;
    return s;
  }

  virtual std::string expr() const = 0;
  virtual Prec prec() const { return Prec::atom; }
  virtual std::size_t max_order() const { return Umbra::npos; }

 protected:
  virtual Series compute(std::size_t order) const = 0;

 private:
  mutable std::mutex mutex_;
  mutable std::optional<Series> cache_;
};

}  // namespace detail

namespace {

using detail::Prec;
using detail::UmbraNode;

std::string wrap(const Umbra& u, Prec at_least) {
  const std::string s = u.expr();
  return u.node().prec() < at_least ? "(" + s + ")" : s;
}

std::size_t min_order(std::size_t a, std::size_t b) { return std::min(a, b); }

std::size_t plus_one(std::size_t a) { return a == Umbra::npos ? a : a + 1; }

class PrimitiveNode final : public UmbraNode {
 public:
  using Generator = Series (*)(std::size_t);
  PrimitiveNode(std::string name, Generator gen) : name_(std::move(name)), gen_(gen) {}
  std::string expr() const override { return name_; }

 protected:
  Series compute(std::size_t order) const override { return gen_(order); }

 private:
  std::string name_;
  Generator gen_;
};

Series exp_t(std::size_t order) {
  std::vector<Rational> c(order + 1);
  Rational f(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n) f *= Rational(n);
    c[n] = Rational(1) / f;
  }
  return Series(std::move(c));
}

Series eps_gf(std::size_t order) { return Series::one(order); }

Series chi_gf(std::size_t order) {
  Series s = Series::identity(order);
  return Series::one(order) + (order >= 1 ? s : Series::zero(order));
}

Series bell_gf(std::size_t order) { return exp(exp_t(order) - Series::one(order)); }

Series bernoulli_gf(std::size_t order) {
  // (e^t - 1)/t has coefficients 1/(n+1)!.
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = Rational(1) / factorial(n + 1);
  return reciprocal(Series(std::move(c)));
}

Series boolean_unity_gf(std::size_t order) {
  return Series(std::vector<Rational>(order + 1, Rational(1)));
}

class ScalarNode final : public UmbraNode {
 public:
  explicit ScalarNode(Rational r) : r_(std::move(r)) {}
  std::string expr() const override { return r_.str(); }

 protected:
  Series compute(std::size_t order) const override {
    std::vector<Rational> c(order + 1);
    Rational p(1), f(1);
    for (std::size_t n = 0; n <= order; ++n) {
      if (n) {
        p *= r_;
        f *= Rational(n);
      }
      c[n] = p / f;
    }
    return Series(std::move(c));
  }

 private:
  Rational r_;
};

class DeltaNode final : public UmbraNode {
 public:
  explicit DeltaNode(long k) : k_(k) {}
  std::string expr() const override { return "delta(" + std::to_string(k_) + ")"; }

 protected:
  Series compute(std::size_t order) const override {
    return Series::one(order) +
           Series::monomial(Rational(1) / factorial(static_cast<std::size_t>(k_)),
                            static_cast<std::size_t>(k_), order);
  }

 private:
  long k_;
};

class MomentsNode final : public UmbraNode {
 public:
  explicit MomentsNode(std::vector<Rational> moments) : moments_(std::move(moments)) {}

  std::string expr() const override {
    std::string s = "mom(";
    for (std::size_t i = 0; i < moments_.size(); ++i) {
      if (i) s += ", ";
      s += moments_[i].str();
    }
    return s + ")";
  }
  std::size_t max_order() const override { return moments_.size() - 1; }

 protected:
  Series compute(std::size_t order) const override {
    if (order >= moments_.size()) {
      throw Error(ErrorKind::beyond_given_order,
                  "moment " + std::to_string(order) + " requested from " + expr());
    }
    std::vector<Rational> c(order + 1);
    Rational f(1);
    for (std::size_t n = 0; n <= order; ++n) {
      if (n) f *= Rational(n);
      c[n] = moments_[n] / f;
    }
    return Series(std::move(c));
  }

 private:
  std::vector<Rational> moments_;
};

class SumNode final : public UmbraNode {
 public:
  explicit SumNode(std::vector<Umbra> terms) : terms_(std::move(terms)) {}

  std::string expr() const override {
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      s += wrap(terms_[i], Prec::dot);
    }
    return s;
  }
  Prec prec() const override { return Prec::sum; }
  std::size_t max_order() const override {
    std::size_t m = Umbra::npos;
    for (const auto& t : terms_) m = min_order(m, t.max_order());
    return m;
  }

 protected:
  Series compute(std::size_t order) const override {
    Series acc = Series::one(order);
    for (const auto& t : terms_) acc = acc * t.mgf(order);
    return acc;
  }

 private:
  std::vector<Umbra> terms_;
};

class ScalarDotNode final : public UmbraNode {
 public:
  ScalarDotNode(Rational x, Umbra a) : x_(std::move(x)), a_(std::move(a)) {}
  std::string expr() const override { return x_.str() + " . " + wrap(a_, Prec::atom); }
  Prec prec() const override { return Prec::dot; }
  std::size_t max_order() const override { return a_.max_order(); }

 protected:
  Series compute(std::size_t order) const override { return pow(a_.mgf(order), x_); }

 private:
  Rational x_;
  Umbra a_;
};

class UmbralDotNode final : public UmbraNode {
 public:
  UmbralDotNode(Umbra g, Umbra a) : g_(std::move(g)), a_(std::move(a)) {}
  std::string expr() const override { return wrap(g_, Prec::dot) + " . " + wrap(a_, Prec::atom); }
  Prec prec() const override { return Prec::dot; }
  std::size_t max_order() const override { return min_order(g_.max_order(), a_.max_order()); }

 protected:
  Series compute(std::size_t order) const override {
    return umbral::compose(g_.mgf(order), log(a_.mgf(order)));
  }

 private:
  Umbra g_, a_;
};

class HadamardNode final : public UmbraNode {
 public:
  HadamardNode(Umbra g, Umbra a) : g_(std::move(g)), a_(std::move(a)) {}
  std::string expr() const override { return "had(" + g_.expr() + ", " + a_.expr() + ")"; }
  std::size_t max_order() const override { return min_order(g_.max_order(), a_.max_order()); }

 protected:
  Series compute(std::size_t order) const override {
    const auto gm = g_.moments(order);
    const Series af = a_.mgf(order);
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = gm[n] * af.coeff(n);
    return Series(std::move(c));
  }

 private:
  Umbra g_, a_;
};

class DerivNode final : public UmbraNode {
 public:
  explicit DerivNode(Umbra a) : a_(std::move(a)) {}
  std::string expr() const override { return "D(" + a_.expr() + ")"; }
  std::size_t max_order() const override { return plus_one(a_.max_order()); }

 protected:
  Series compute(std::size_t order) const override {
    if (order == 0) return Series::one(0);
    return Series::one(order) + a_.mgf(order - 1).shift_up(1);
  }

 private:
  Umbra a_;
};

class InverseNode final : public UmbraNode {
 public:
  explicit InverseNode(Umbra a) : a_(std::move(a)) {}
  std::string expr() const override { return "inv(" + a_.expr() + ")"; }
  std::size_t max_order() const override { return a_.max_order(); }

 protected:
  Series compute(std::size_t order) const override {
    if (order == 0) return Series::one(0);
    return Series::one(order) + revert(a_.mgf(order) - Series::one(order));
  }

 private:
  Umbra a_;
};

class KappaNode final : public UmbraNode {
 public:
  KappaNode(Umbra s, Umbra a) : s_(std::move(s)), a_(std::move(a)) {}
  std::string expr() const override { return "K(" + s_.expr() + ", " + a_.expr() + ")"; }
  std::size_t max_order() const override { return min_order(s_.max_order(), plus_one(a_.max_order())); }

 protected:
  Series compute(std::size_t order) const override {
    if (order == 0) return Series::one(0);
    const Series h = a_.mgf(order - 1).shift_up(1);
    return umbral::compose(s_.mgf(order), revert(h));
  }

 private:
  Umbra s_, a_;
};

class LagrangeNode final : public UmbraNode {
 public:
  LagrangeNode(Umbra s, Umbra a) : s_(s), a_(a), kappa_(kappa(s, a)) {}
  std::string expr() const override { return "L(" + s_.expr() + ", " + a_.expr() + ")"; }
  std::size_t max_order() const override { return kappa_.max_order(); }

 protected:
  Series compute(std::size_t order) const override { return reciprocal(kappa_.mgf(order)); }

 private:
  Umbra s_, a_, kappa_;
};

template <class Node, class... Args>
Umbra make(Args&&... args) {
  return Umbra(std::make_shared<const Node>(std::forward<Args>(args)...));
}

}  // namespace

Umbra::Umbra(std::shared_ptr<const detail::UmbraNode> node) : node_(std::move(node)) {}

Umbra Umbra::augmentation() {
  static const Umbra u = make<PrimitiveNode>("eps", &eps_gf);
  return u;
}

Umbra Umbra::unity() {
  static const Umbra u = make<PrimitiveNode>("u", &exp_t);
  return u;
}

Umbra Umbra::singleton() {
  static const Umbra u = make<PrimitiveNode>("chi", &chi_gf);
  return u;
}

Umbra Umbra::bell() {
  static const Umbra u = make<PrimitiveNode>("bell", &bell_gf);
  return u;
}

Umbra Umbra::bernoulli() {
  static const Umbra u = make<PrimitiveNode>("bern", &bernoulli_gf);
  return u;
}

Umbra Umbra::boolean_unity() {
  static const Umbra u = make<PrimitiveNode>("boolu", &boolean_unity_gf);
  return u;
}

Umbra Umbra::named(std::string_view name) {
  if (name == "eps") return augmentation();
  if (name == "unity" || name == "u") return unity();
  if (name == "singleton" || name == "chi") return singleton();
  if (name == "bell") return bell();
  if (name == "bernoulli" || name == "bern") return bernoulli();
  if (name == "boolean_unity" || name == "boolu") return boolean_unity();
  throw Error(ErrorKind::unknown_name, "unknown umbra '" + std::string(name) + "'");
}

Umbra Umbra::delta(long k) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "delta(k) needs k >= 1");
  return make<DeltaNode>(k);
}

Umbra Umbra::scalar(const Rational& r) { return make<ScalarNode>(r); }

Umbra Umbra::from_moments(std::vector<Rational> moments) {
  if (moments.empty() || moments.front() != Rational(1)) {
    throw Error(ErrorKind::bad_constant_term, "moment 0 of an umbra must be 1");
  }
  return make<MomentsNode>(std::move(moments));
}

Umbra Umbra::from_gf(std::vector<Rational> coeffs) {
  if (coeffs.empty() || coeffs.front() != Rational(1)) {
    throw Error(ErrorKind::bad_constant_term, "generating function of an umbra must start with 1");
  }
  Rational f(1);
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    f *= Rational(n);
    coeffs[n] *= f;
  }
  return make<MomentsNode>(std::move(coeffs));
}

Rational Umbra::moment(std::size_t n) const { return node_->mgf(n).coeff(n) * factorial(n); }

std::vector<Rational> Umbra::moments(std::size_t n) const {
  const Series f = node_->mgf(n);
  std::vector<Rational> out(n + 1);
  Rational fact(1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i) fact *= Rational(i);
    out[i] = f.coeff(i) * fact;
  }
  return out;
}

Series Umbra::mgf(std::size_t order) const { return node_->mgf(order); }

std::string Umbra::expr() const { return node_->expr(); }

std::size_t Umbra::max_order() const { return node_->max_order(); }

Umbra usum(const Umbra& a, const Umbra& b) { return make<SumNode>(std::vector<Umbra>{a, b}); }

Umbra usum(std::initializer_list<Umbra> terms) {
  if (terms.size() == 0) return Umbra::augmentation();
  if (terms.size() == 1) return *terms.begin();
  return make<SumNode>(std::vector<Umbra>(terms));
}

Umbra sdot(const Rational& x, const Umbra& a) { return make<ScalarDotNode>(x, a); }

Umbra udot(const Umbra& g, const Umbra& a) { return make<UmbralDotNode>(g, a); }

Umbra compose(const Umbra& s, const Umbra& a) { return udot(udot(s, Umbra::bell()), a); }

Umbra had(const Umbra& g, const Umbra& a) { return make<HadamardNode>(g, a); }

Umbra deriv(const Umbra& a) { return make<DerivNode>(a); }

Umbra cinv(const Umbra& a) {
  if (a.moment(1).is_zero()) {
    throw Error(ErrorKind::not_invertible, "inv(" + a.expr() + "): first moment is zero");
  }
  return make<InverseNode>(a);
}

Umbra kappa(const Umbra& s, const Umbra& a) { return make<KappaNode>(s, a); }

Umbra lagrange(const Umbra& s, const Umbra& a) { return make<LagrangeNode>(s, a); }

Rational abel_moment(const Umbra& s, const Umbra& a, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "abel_moment needs n >= 1");
  const auto sm = s.moments(n);
  const auto neg = sdot(Rational(-static_cast<long>(n)), a).moments(n - 1);
  Rational sum;
  for (std::size_t j = 0; j + 1 <= n; ++j) {
    sum += binomial(static_cast<long>(n) - 1, static_cast<long>(j)) * sm[j + 1] * neg[n - 1 - j];
  }
  return sum;
}

Rational dot_via_bell(const Umbra& g, const Umbra& a, std::size_t n) {
  const auto gm = g.moments(n);
  const auto am = a.moments(n);
  const std::span<const Rational> tail(am.data() + 1, n);
  Rational sum;
  for (std::size_t i = 0; i <= n; ++i) {
    Rational factorial_moment;
    for (std::size_t j = 0; j <= i; ++j) factorial_moment += oracle::stirling1(i, j) * gm[j];
    if (factorial_moment.is_zero()) continue;
    sum += factorial_moment * bell_partial(n, i, tail);
  }
  return sum;
}

bool similar(const Umbra& a, const Umbra& b, std::size_t order) {
  return a.moments(order) == b.moments(order);
}

}  // namespace umbral
