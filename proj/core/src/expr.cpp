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

#include "umbral/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace umbral::expr {

Node Node::make_name(std::string id) {
  Node n;
  n.kind = Kind::name;
  n.id = std::move(id);
  return n;
}

Node Node::make_rational(Rational value) {
  Node n;
  n.kind = Kind::rational;
  n.value = std::move(value);
  return n;
}

Node Node::make_sum(std::vector<Node> terms) {
  Node n;
  n.kind = Kind::sum;
  n.children = std::move(terms);
  return n;
}

Node Node::make_dot(Node left, Node right) {
  Node n;
  n.kind = Kind::dot;
  n.children.push_back(std::move(left));
  n.children.push_back(std::move(right));
  return n;
}

Node Node::make_call(std::string func, std::vector<Node> args) {
  Node n;
  n.kind = Kind::call;
  n.id = std::move(func);
  n.children = std::move(args);
  return n;
}

bool operator==(const Node& a, const Node& b) {
  return a.kind == b.kind && a.id == b.id && a.value == b.value && a.children == b.children;
}

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += i + 1 == expected.size() ? " or " : ", ";
    s += expected[i];
  }
  return s;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::syntax_error,
            "syntax error at offset " + std::to_string(offset) + ": expected " + describe_expected(expected) +
                ", found " + found),
      offset_(offset), expected_(std::move(expected)) {}

namespace {

constexpr std::array<std::string_view, 6> kNames{"eps", "u", "chi", "bell", "bern", "boolu"};

enum class ArgKind { umbra, rational };

struct FuncSpec {
  std::string_view name;
  std::size_t min;
  std::size_t max;
  ArgKind kind;
};

constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

constexpr std::array<FuncSpec, 7> kFuncs{{
    {"D", 1, 1, ArgKind::umbra},
    {"inv", 1, 1, ArgKind::umbra},
    {"K", 1, 2, ArgKind::umbra},
    {"L", 1, 2, ArgKind::umbra},
    {"had", 2, 2, ArgKind::umbra},
    {"delta", 1, 1, ArgKind::rational},
    {"mom", 1, kUnbounded, ArgKind::rational},
}};

const FuncSpec* find_func(std::string_view id) {
  for (const auto& f : kFuncs) {
    if (f.name == id) return &f;
  }
  return nullptr;
}

bool is_name(std::string_view id) { return std::find(kNames.begin(), kNames.end(), id) != kNames.end(); }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Node parse_all() {
    Node e = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail({"+", ".", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  std::string found() const {
    if (pos_ >= src_.size()) return "end of input";
    return std::string("'") + src_[pos_] + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) { throw SyntaxError(pos_, std::move(expected), found()); }

  Node parse_sum() {
    std::vector<Node> terms;
    auto push = [&](Node t) {
      if (t.kind == Node::Kind::sum) {
        for (auto& c : t.children) terms.push_back(std::move(c));
      } else {
        terms.push_back(std::move(t));
      }
    };
    push(parse_dot());
    while (at('+')) {
      ++pos_;
      push(parse_dot());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return Node::make_sum(std::move(terms));
  }

  Node parse_dot() {
    Node left = parse_atom();
    while (at('.')) {
      ++pos_;
      left = Node::make_dot(std::move(left), parse_atom());
    }
    return left;
  }

  Node parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail({"NAME", "RATIONAL", "FUNC", "("});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Node inner = parse_sum();
      if (!at(')')) fail({"+", ".", ")"});
      ++pos_;
      return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return Node::make_rational(parse_rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string id(src_.substr(start, pos_ - start));
      if (is_name(id)) return Node::make_name(id);
      if (const FuncSpec* f = find_func(id)) return parse_call(*f);
      throw Error(ErrorKind::unknown_name, "unknown name '" + id + "' at offset " + std::to_string(start));
    }
    fail({"NAME", "RATIONAL", "FUNC", "("});
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail({"INT"});
    return std::string(src_.substr(start, pos_ - start));
  }

  Rational parse_rational() {
    skip_ws();
    std::string text;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      text = "-";
      ++pos_;
    }
    text += digits();
    if (at('/')) {
      ++pos_;
      skip_ws();
      const std::size_t den_at = pos_;
      const std::string den = digits();
      if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; })) {
        pos_ = den_at;
        fail({"nonzero INT"});
      }
      text += "/" + den;
    }
    return Rational::parse(text);
  }

  Node parse_call(const FuncSpec& f) {
    if (!at('(')) fail({"("});
    ++pos_;
    std::vector<Node> args;
    for (;;) {
      if (f.kind == ArgKind::umbra) {
        args.push_back(parse_sum());
      } else {
        skip_ws();
        const std::size_t arg_at = pos_;
        Rational r = parse_rational();
        if (f.name == "delta" && !(r.is_integer() && r.sign() > 0)) {
          pos_ = arg_at;
          fail({"positive INT"});
        }
        args.push_back(Node::make_rational(std::move(r)));
      }
      const bool more = args.size() < f.max;
      const bool enough = args.size() >= f.min;
      if (more && at(',')) {
        ++pos_;
        continue;
      }
      if (enough && at(')')) {
        ++pos_;
        break;
      }
      std::vector<std::string> expected;
      if (f.kind == ArgKind::umbra) expected = {"+", "."};
      if (more) expected.emplace_back(",");
      if (enough) expected.emplace_back(")");
      fail(std::move(expected));
    }
    return Node::make_call(std::string(f.name), std::move(args));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

enum class Level { sum, dot, atom };

std::string print_at(const Node& e, Level level) {
  switch (e.kind) {
    case Node::Kind::name: return e.id;
    case Node::Kind::rational: return e.value.str();
    case Node::Kind::sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += " + ";
        s += print_at(e.children[i], Level::dot);
      }
      return level == Level::sum ? s : "(" + s + ")";
    }
    case Node::Kind::dot: {
      std::string s = print_at(e.children[0], Level::dot) + " . " + print_at(e.children[1], Level::atom);
      return level == Level::atom ? "(" + s + ")" : s;
    }
    case Node::Kind::call: {
      std::string s = e.id + "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += ", ";
        s += print_at(e.children[i], Level::sum);
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace

Node parse(std::string_view source) { return Parser(source).parse_all(); }

std::string print(const Node& e) { return print_at(e, Level::sum); }

Umbra eval(const Node& e) {
  switch (e.kind) {
    case Node::Kind::name: return Umbra::named(e.id);
    case Node::Kind::rational: return Umbra::scalar(e.value);
    case Node::Kind::sum: {
      Umbra acc = eval(e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) acc = usum(acc, eval(e.children[i]));
      return acc;
    }
    case Node::Kind::dot: {
      const Node& left = e.children[0];
      if (left.kind == Node::Kind::rational) return sdot(left.value, eval(e.children[1]));
      return udot(eval(left), eval(e.children[1]));
    }
    case Node::Kind::call: break;
  }
  const auto& args = e.children;
  if (e.id == "D") return deriv(eval(args[0]));
  if (e.id == "inv") return cinv(eval(args[0]));
  if (e.id == "K") return args.size() == 1 ? kappa(eval(args[0])) : kappa(eval(args[0]), eval(args[1]));
  if (e.id == "L") return args.size() == 1 ? lagrange(eval(args[0])) : lagrange(eval(args[0]), eval(args[1]));
  if (e.id == "had") return had(eval(args[0]), eval(args[1]));
  if (e.id == "delta") return Umbra::delta(*args[0].value.to_long());
  if (e.id == "mom") {
    std::vector<Rational> m;
    m.reserve(args.size());
    for (const auto& a : args) m.push_back(a.value);
    return Umbra::from_moments(std::move(m));
  }
  throw Error(ErrorKind::evaluation_error, "cannot evaluate call '" + e.id + "'");
}

Umbra evaluate(std::string_view source) { return eval(parse(source)); }

}  // namespace umbral::expr
