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

#include "umbral/identities.hpp"

#include <string>
#include <utility>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"
#include "umbral/series.hpp"

namespace umbral {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::pair<std::string, std::string> param(std::string key, long v) { return {std::move(key), std::to_string(v)}; }
std::pair<std::string, std::string> param(std::string key, const Rational& v) { return {std::move(key), v.str()}; }
std::pair<std::string, std::string> param(std::string key, const Umbra& v) { return {std::move(key), v.expr()}; }

Params array_params(const RiordanArray& a) {
  return {param("gamma", a.gamma()), param("alpha", a.alpha()), {"weights", a.weights().describe()}};
}

Rational fact(long n) { return factorial(static_cast<std::size_t>(n)); }

std::size_t idx(long n) { return static_cast<std::size_t>(n); }

void flatten_into(std::vector<Rational>& out, const Triangle& t) {
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
}

}  // namespace

VerificationReport check_abel_classical(const Rational& x, const Rational& y, const Rational& a, std::size_t n) {
  const long nn = static_cast<long>(n);
  Rational rhs;
  for (long k = 0; k <= nn; ++k) {
    const Rational head = binomial(nn, k) * pow(y + Rational(k) * a, nn - k);
    rhs += k == 0 ? head : head * x * pow(x - Rational(k) * a, k - 1);
  }
  return VerificationReport::make("abel_classical",
                                  {param("x", x), param("y", y), param("a", a), param("n", nn)},
                                  {pow(x + y, nn)}, {rhs});
}

VerificationReport check_abel_I(const Umbra& g, const Umbra& s, const Umbra& a, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::guard_violation, "abel1 needs n >= 1");
  const long nn = static_cast<long>(n);
  Rational rhs;
  for (long k = 0; k <= nn; ++k) {
    const Rational factor = k == 0 ? Rational(1) : abel_moment(s, a, idx(k));
    rhs += binomial(nn, k) * usum(g, sdot(Rational(k), a)).moment(idx(nn - k)) * factor;
  }
  return VerificationReport::make("abel1", {param("gamma", g), param("sigma", s), param("alpha", a), param("n", nn)},
                                  {usum(g, s).moment(n)}, {rhs});
}

VerificationReport check_abel_II(const Umbra& g, const Umbra& e, const Umbra& a, std::size_t n) {
  const long nn = static_cast<long>(n);
  Rational rhs;
  for (long k = 0; k <= nn; ++k) {
    rhs += binomial(nn, k) * usum(g, sdot(Rational(k), a)).moment(idx(nn - k)) * e.moment(idx(k));
  }
  const Rational lhs = usum(g, compose(e, deriv(a))).moment(n);
  return VerificationReport::make("abel2", {param("gamma", g), param("eta", e), param("alpha", a), param("n", nn)},
                                  {lhs}, {rhs});
}

VerificationReport check_comp_mom(const Umbra& s, const Umbra& a, std::size_t n) {
  const long nn = static_cast<long>(n);
  Rational moment_rhs;
  for (long k = 0; k <= nn; ++k) {
    moment_rhs += binomial(nn, k) * s.moment(idx(k)) * sdot(Rational(k), a).moment(idx(nn - k));
  }
  const Series fs = s.mgf(n);
  const Series fa = a.mgf(n);
  const Rational coeff_lhs = compose(fs, fa.shift_up(1)).coeff(n);
  Rational coeff_rhs;
  for (std::size_t k = 0; k <= n; ++k) coeff_rhs += fs.coeff(k) * pow(fa, static_cast<long>(k)).coeff(n - k);
  return VerificationReport::make("compmom", {param("sigma", s), param("alpha", a), param("n", nn)},
                                  {compose(s, deriv(a)).moment(n), coeff_lhs}, {moment_rhs, coeff_rhs});
}

VerificationReport check_lif(const Umbra& s, const Umbra& a, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::guard_violation, "lif needs n >= 1");
  const long nn = static_cast<long>(n);
  const Rational abel = abel_moment(s, a, n);
  const Rational via_kappa = kappa(s, a).moment(n);
  const Rational via_derivative =
      fact(nn - 1) * (s.mgf(n).derivative() * pow(a.mgf(n - 1), -nn)).coeff(n - 1);
  const Rational via_reversion = fact(nn) * compose(s.mgf(n), revert(a.mgf(n).shift_up(1))).coeff(n);
  return VerificationReport::make("lif", {param("sigma", s), param("alpha", a), param("n", nn)},
                                  {abel, abel, abel}, {via_kappa, via_derivative, via_reversion});
}

VerificationReport check_mother(const Umbra& g, const Umbra& a, const Umbra& l, long n, long k, long m) {
  if (n < k) throw Error(ErrorKind::guard_violation, "mother needs n >= k");
  const long d = n - k;
  Rational rhs;
  const Umbra ma = sdot(Rational(m), a);
  const Umbra base = usum(g, sdot(Rational(k - m), a));
  for (long i = 0; i <= d; ++i) {
    const Rational factor = i == 0 ? Rational(1) : abel_moment(ma, l, idx(i));
    if (factor.is_zero()) continue;
    rhs += binomial(d, i) * usum(base, sdot(Rational(i), l)).moment(idx(d - i)) * factor;
  }
  return VerificationReport::make(
      "mother",
      {param("gamma", g), param("alpha", a), param("lambda", l), param("n", n), param("k", k), param("m", m)},
      {usum(g, sdot(Rational(k), a)).moment(idx(d))}, {rhs});
}

namespace {

void require_entry_indices(long n, long k) {
  if (k < 0 || n < k) {
    throw Error(ErrorKind::index_violation,
                "need n >= k >= 0, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
}

}  // namespace

Rational nonrec_entry(const RiordanArray& a, long n, long k, long m, const Umbra& l) {
  require_entry_indices(n, k);
  const WeightSeq& c = a.weights();
  const Umbra coef = sdot(Rational(m), kappa(a.alpha(), l));
  const Umbra base = usum(a.gamma(), sdot(Rational(k - m), a.alpha()));
  Rational sum;
  for (long i = 0; i <= n - k; ++i) {
    const Rational ki = coef.moment(idx(i));
    if (ki.is_zero()) continue;
    sum += ki / fact(i) * usum(base, sdot(Rational(i), l)).moment(idx(n - k - i)) / fact(n - k - i);
  }
  return c(n) / c(k) * sum;
}

Rational nonrec_entry_lambda(const RiordanArray& a, long n, long k, long m, const Umbra& l) {
  require_entry_indices(n, k);
  const WeightSeq& c = a.weights();
  const Umbra coef = sdot(Rational(m), kappa(a.alpha(), l));
  const RiordanArray shifted(usum(a.gamma(), sdot(Rational(k - m), a.alpha())), l, c);
  Rational sum;
  for (long i = 0; i <= n - k; ++i) {
    const Rational ki = coef.moment(idx(i));
    if (ki.is_zero()) continue;
    sum += c(i) * ki / fact(i) * shifted.entry(n - k, i);
  }
  return c(n) / (c(k) * c(n - k)) * sum;
}

Rational nonrec_entry_exp(const RiordanArray& a, long n, long k, long m, const Umbra& l) {
  require_entry_indices(n, k);
  if (a.weights().kind() != WeightSeq::Kind::exponential) {
    throw Error(ErrorKind::weight_mismatch, "the binomial form needs exponential weights");
  }
  const Umbra coef = sdot(Rational(m), kappa(a.alpha(), l));
  const Umbra base = usum(a.gamma(), sdot(Rational(k - m), a.alpha()));
  Rational sum;
  for (long i = 0; i <= n - k; ++i) {
    sum += binomial(n - k, i) * coef.moment(idx(i)) * usum(base, sdot(Rational(i), l)).moment(idx(n - k - i));
  }
  return binomial(n, k) * sum;
}

VerificationReport check_nonrec(const RiordanArray& a, long n, long k, long m, const Umbra& l) {
  const Rational e = a.entry(n, k);
  std::vector<Rational> lhs{e, e};
  std::vector<Rational> rhs{nonrec_entry(a, n, k, m, l), nonrec_entry_lambda(a, n, k, m, l)};
  if (a.weights().kind() == WeightSeq::Kind::exponential) {
    lhs.push_back(e);
    rhs.push_back(nonrec_entry_exp(a, n, k, m, l));
  }
  Params p = array_params(a);
  p.push_back(param("lambda", l));
  p.push_back(param("n", n));
  p.push_back(param("k", k));
  p.push_back(param("m", m));
  return VerificationReport::make("nonrec", std::move(p), std::move(lhs), std::move(rhs));
}

namespace {

Params recurrence_params(const RiordanArray& a, long n, long k, long m) {
  Params p = array_params(a);
  p.push_back(param("n", n));
  p.push_back(param("k", k));
  p.push_back(param("m", m));
  return p;
}

[[noreturn]] void guard_failed(const char* name, const char* guard, long n, long k, long m) {
  throw Error(ErrorKind::guard_violation, std::string(name) + " needs " + guard + ", got n=" + std::to_string(n) +
                                              ", k=" + std::to_string(k) + ", m=" + std::to_string(m));
}

}  // namespace

VerificationReport rec_horizontal(const RiordanArray& a, long n, long k, long m) {
  if (!(n >= k && k >= 0 && m <= k)) guard_failed("rec-h", "n >= k >= 0 and m <= k", n, k, m);
  const WeightSeq& c = a.weights();
  const Umbra coef = sdot(Rational(m), kappa(a.alpha()));
  Rational sum;
  for (long i = 0; i <= n - k; ++i) {
    const Rational ai = coef.moment(idx(i));
    if (ai.is_zero()) continue;
    sum += c(k - m + i) * ai / fact(i) * a.entry(n - m, k - m + i);
  }
  const Rational rhs = c(n) / (c(k) * c(n - m)) * sum;
  return VerificationReport::make("rec-h", recurrence_params(a, n, k, m), {a.entry(n, k)}, {rhs});
}

VerificationReport rec_vertical(const RiordanArray& a, long n, long k, long m) {
  if (!(n >= k && k >= m)) guard_failed("rec-v", "n >= k >= m", n, k, m);
  const WeightSeq& c = a.weights();
  const Umbra coef = sdot(Rational(m), a.alpha());
  Rational sum;
  for (long i = 0; i <= n - k; ++i) {
    const Rational ai = coef.moment(idx(i));
    if (ai.is_zero()) continue;
    sum += ai / (fact(i) * c(n - m - i)) * a.entry(n - m - i, k - m);
  }
  const Rational rhs = c(n) * c(k - m) / c(k) * sum;
  return VerificationReport::make("rec-v", recurrence_params(a, n, k, m), {a.entry(n, k)}, {rhs});
}

VerificationReport rec_diff(const RiordanArray& a, long n, long k, long m) {
  if (!(n >= k && k >= 0 && 2 * k - n >= m)) guard_failed("rec-d", "n >= k >= 0 and 2k - n >= m", n, k, m);
  const WeightSeq& c = a.weights();
  const long d = n - k;
  const Umbra neg = sdot(Rational(-1), a.alpha());
  const Umbra coef = sdot(Rational(-m), kappa(neg, neg));

  // i! [t^i] (f_alpha((t / f_alpha)^<-1>))^m straight from series.
  const Series fa = a.alpha().mgf(idx(d));
  const Series classical = pow(compose(fa, revert(reciprocal(fa).shift_up(1))), m);

  Rational umbral_sum;
  Rational classical_sum;
  for (long i = 0; i <= d; ++i) {
    const Rational scale = c(k - m - i) / c(n - m - 2 * i) * a.entry(n - m - 2 * i, k - m - i) / fact(i);
    umbral_sum += scale * coef.moment(idx(i));
    classical_sum += scale * fact(i) * classical.coeff(idx(i));
  }
  const Rational e = a.entry(n, k);
  const Rational w = c(n) / c(k);
  return VerificationReport::make("rec-d", recurrence_params(a, n, k, m), {e, e}, {w * umbral_sum, w * classical_sum});
}

VerificationReport check_lagrangek(int which, const Umbra& a, long n, long k) {
  if (which != 1 && which != 2) throw Error(ErrorKind::invalid_argument, "lagrangek form must be 1 or 2");
  if (!(1 <= k && k <= n)) {
    throw Error(ErrorKind::guard_violation,
                "lagrangek needs 1 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  const std::size_t d = idx(n - k);
  Rational lhs;
  Rational rhs;
  if (which == 1) {
    lhs = Rational(n) * sdot(Rational(k), lagrange(a)).moment(d);
    rhs = Rational(k) * sdot(Rational(-n), a).moment(d);
  } else {
    lhs = Rational(n) * sdot(Rational(k), a).moment(d);
    rhs = Rational(k) * sdot(Rational(n), kappa(a)).moment(d);
  }
  return VerificationReport::make(which == 1 ? "lagrangek1" : "lagrangek2",
                                  {param("alpha", a), param("n", n), param("k", k)}, {lhs}, {rhs});
}

VerificationReport check_group_inverse(const RiordanArray& a, std::size_t rows) {
  const RiordanArray inv = inverse(a);
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  const Triangle id = identity_triangle(rows);
  flatten_into(lhs, multiply(a, inv).matrix(rows));
  flatten_into(lhs, multiply(inv, a).matrix(rows));
  flatten_into(lhs, multiply(a.matrix(rows), inv.matrix(rows)));
  for (int i = 0; i < 3; ++i) flatten_into(rhs, id);
  Params p = array_params(a);
  p.push_back(param("rows", static_cast<long>(rows)));
  return VerificationReport::make("group-inverse", std::move(p), std::move(lhs), std::move(rhs));
}

VerificationReport check_group_assoc(const RiordanArray& a, const RiordanArray& b, const RiordanArray& c,
                                     std::size_t rows) {
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  flatten_into(lhs, multiply(multiply(a, b), c).matrix(rows));
  flatten_into(lhs, multiply(a, multiply(b, c)).matrix(rows));
  const Triangle numeric = multiply(multiply(a.matrix(rows), b.matrix(rows)), c.matrix(rows));
  flatten_into(rhs, numeric);
  flatten_into(rhs, numeric);
  Params p{param("A.gamma", a.gamma()), param("A.alpha", a.alpha()), param("B.gamma", b.gamma()),
           param("B.alpha", b.alpha()), param("C.gamma", c.gamma()), param("C.alpha", c.alpha()),
           {"weights", a.weights().describe()}, param("rows", static_cast<long>(rows))};
  return VerificationReport::make("group-assoc", std::move(p), std::move(lhs), std::move(rhs));
}

VerificationReport check_ftra(const RiordanArray& a, const Umbra& eta, std::size_t n) {
  Params p = array_params(a);
  p.push_back(param("eta", eta));
  p.push_back(param("n", static_cast<long>(n)));
  return VerificationReport::make("ftra", std::move(p), apply(a, eta, n + 1), apply_closed_form(a, eta, n + 1));
}

}  // namespace umbral
