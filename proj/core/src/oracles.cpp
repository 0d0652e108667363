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

#include "umbral/oracles.hpp"

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"

namespace umbral::oracle {

namespace {

using Seq = std::vector<Rational>;

// A grow-only memo table; `extend` appends entries until index n exists.
template <class T>
class Memo {
 public:
  explicit Memo(std::function<void(std::vector<T>&, std::size_t)> extend) : extend_(std::move(extend)) {}

  T at(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (table_.size() <= n) extend_(table_, table_.size());
    return table_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<T> table_;
  std::function<void(std::vector<T>&, std::size_t)> extend_;
};

Seq binomial_convolve(const Seq& x, const Seq& y) {
  Seq out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      out[n] += binomial(static_cast<long>(n), static_cast<long>(j)) * x[j] * y[n - j];
    }
  }
  return out;
}

Seq ordinary_convolve(const Seq& x, const Seq& y) {
  Seq out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (std::size_t j = 0; j <= n; ++j) out[n] += x[j] * y[n - j];
  }
  return out;
}

Seq power(const Seq& base, long times, Seq (*conv)(const Seq&, const Seq&)) {
  Seq acc(base.size());
  acc[0] = Rational(1);
  for (long i = 0; i < times; ++i) acc = conv(acc, base);
  return acc;
}

// Row n of the Bell triangle starts with B_n.
Memo<Seq>& bell_rows() {
  static Memo<Seq> memo([](std::vector<Seq>& rows, std::size_t n) {
    if (n == 0) {
      rows.push_back({Rational(1)});
      return;
    }
    const Seq& prev = rows[n - 1];
    Seq row{prev.back()};
    for (const auto& x : prev) row.push_back(row.back() + x);
    rows.push_back(std::move(row));
  });
  return memo;
}

Memo<Rational>& bernoulli_memo() {
  static Memo<Rational> memo([](std::vector<Rational>& b, std::size_t n) {
    if (n == 0) {
      b.push_back(Rational(1));
      return;
    }
    Rational s;
    for (std::size_t j = 0; j < n; ++j) s += binomial(static_cast<long>(n) + 1, static_cast<long>(j)) * b[j];
    b.push_back(-s / Rational(n + 1));
  });
  return memo;
}

// Row n of a Stirling triangle, entries k = 0..n.
Memo<Seq>& stirling2_rows() {
  static Memo<Seq> memo([](std::vector<Seq>& rows, std::size_t n) {
    Seq row(n + 1);
    if (n == 0) {
      row[0] = Rational(1);
    } else {
      const Seq& prev = rows[n - 1];
      for (std::size_t k = 1; k <= n; ++k) {
        Rational v = prev.size() > k ? Rational(k) * prev[k] : Rational(0);
        v += prev[k - 1];
        row[k] = std::move(v);
      }
    }
    rows.push_back(std::move(row));
  });
  return memo;
}

Memo<Seq>& stirling1_rows() {
  static Memo<Seq> memo([](std::vector<Seq>& rows, std::size_t n) {
    Seq row(n + 1);
    if (n == 0) {
      row[0] = Rational(1);
    } else {
      const Seq& prev = rows[n - 1];
      for (std::size_t k = 1; k <= n; ++k) {
        Rational v = prev[k - 1];
        if (prev.size() > k) v -= Rational(n - 1) * prev[k];
        row[k] = std::move(v);
      }
    }
    rows.push_back(std::move(row));
  });
  return memo;
}

Memo<Rational>& catalan_memo() {
  static Memo<Rational> memo([](std::vector<Rational>& c, std::size_t n) {
    if (n == 0) {
      c.push_back(Rational(1));
      return;
    }
    Rational s;
    for (std::size_t i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
    c.push_back(std::move(s));
  });
  return memo;
}

}  // namespace

Rational bell(std::size_t n) { return bell_rows().at(n).front(); }

Rational bernoulli(std::size_t n) { return bernoulli_memo().at(n); }

Rational bernoulli_gen(long k, std::size_t n) {
  Seq base(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    base[j] = k >= 0 ? bernoulli(j) : Rational(1) / Rational(j + 1);
  }
  return power(base, k >= 0 ? k : -k, &binomial_convolve)[n];
}

Rational stirling2(std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  return stirling2_rows().at(n)[k];
}

Rational stirling1(std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  return stirling1_rows().at(n)[k];
}

Rational catalan(std::size_t n) { return catalan_memo().at(n); }

Rational catalan_gen(long m, std::size_t i) {
  Seq base(i + 1);
  for (std::size_t j = 0; j <= i; ++j) {
    if (m >= 0) {
      base[j] = catalan(j);
    } else {
      base[j] = j == 0 ? Rational(1) : -catalan(j - 1);
    }
  }
  return power(base, m >= 0 ? m : -m, &ordinary_convolve)[i];
}

Rational cauchy1(std::size_t n) {
  Rational s;
  for (std::size_t k = 0; k <= n; ++k) s += stirling1(n, k) / Rational(k + 1);
  return s;
}

Rational cauchy1_gen(long m, std::size_t n) {
  Seq base(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (m >= 0) {
      base[j] = cauchy1(j);
    } else {
      base[j] = factorial(j) * Rational(j % 2 ? -1 : 1) / Rational(j + 1);
    }
  }
  return power(base, m >= 0 ? m : -m, &binomial_convolve)[n];
}

Rational lookup(std::string_view name, std::span<const long> args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorKind::index_violation, std::string(name) + " takes " + std::to_string(count) + " index arguments");
    }
  };
  auto index = [&](std::size_t i) {
    if (args[i] < 0) throw Error(ErrorKind::index_violation, std::string(name) + ": negative index");
    return static_cast<std::size_t>(args[i]);
  };
  if (name == "bell") { need(1); return bell(index(0)); }
  if (name == "bernoulli") { need(1); return bernoulli(index(0)); }
  if (name == "bernoulli_gen") { need(2); return bernoulli_gen(args[0], index(1)); }
  if (name == "stirling2") { need(2); return stirling2(index(0), index(1)); }
  if (name == "stirling1") { need(2); return stirling1(index(0), index(1)); }
  if (name == "catalan") { need(1); return catalan(index(0)); }
  if (name == "catalan_gen") { need(2); return catalan_gen(args[0], index(1)); }
  if (name == "cauchy1") { need(1); return cauchy1(index(0)); }
  if (name == "cauchy1_gen") { need(2); return cauchy1_gen(args[0], index(1)); }
  throw Error(ErrorKind::unknown_name, "unknown oracle '" + std::string(name) + "'");
}

}  // namespace umbral::oracle
