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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "brute.hpp"
#include "umbral/random.hpp"

namespace umbral::expr {
namespace {

using K = Node::Kind;

const Umbra eps = Umbra::augmentation();

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Canonical trees: sums have at least two terms and none of them is a sum.
Node random_tree(InstanceGenerator& gen, int depth) {
  static const char* const names[] = {"eps", "u", "chi", "bell", "bern", "boolu"};
  const long pick = depth <= 0 ? gen.integer(0, 1) : gen.integer(0, 6);
  switch (pick) {
    case 0: return Node::make_name(names[gen.integer(0, 5)]);
    case 1: return Node::make_rational(gen.rational());
    case 2: {
      std::vector<Node> terms;
      const long count = gen.integer(2, 3);
      while (static_cast<long>(terms.size()) < count) {
        Node t = random_tree(gen, depth - 1);
        if (t.kind != K::sum) terms.push_back(std::move(t));
      }
      return Node::make_sum(std::move(terms));
    }
    case 3:
    case 4: return Node::make_dot(random_tree(gen, depth - 1), random_tree(gen, depth - 1));
    case 5: {
      static const char* const unary[] = {"D", "inv", "K", "L"};
      return Node::make_call(unary[gen.integer(0, 3)], {random_tree(gen, depth - 1)});
    }
    default: {
      if (gen.integer(0, 1) == 0) return Node::make_call("delta", {Node::make_rational(Rational(gen.integer(1, 4)))});
      std::vector<Node> args;
      for (long i = gen.integer(1, 4); i > 0; --i) args.push_back(Node::make_rational(gen.rational()));
      return Node::make_call("mom", std::move(args));
    }
  }
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse("chi . bell"), Node::make_dot(Node::make_name("chi"), Node::make_name("bell")));
  EXPECT_TRUE(similar(evaluate("chi . bell"), Umbra::unity(), 10));
  EXPECT_TRUE(similar(evaluate("bell . chi"), Umbra::unity(), 10));
  EXPECT_EQ(parse("-1 . bern"), Node::make_dot(Node::make_rational(Rational(-1)), Node::make_name("bern")));
  EXPECT_TRUE(similar(evaluate("-1 . bern"), sdot(Rational(-1), Umbra::bernoulli()), 10));
  EXPECT_TRUE(similar(evaluate("eps + eps"), eps, 10));
}

TEST(Parse, SyntaxErrorOffset) {
  try {
    parse("u . . bell");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.kind(), ErrorKind::syntax_error);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"NAME", "RATIONAL", "FUNC", "("}));
  }
}

TEST(Parse, MoreSyntaxErrors) {
  const struct {
    const char* src;
    std::size_t offset;
  } cases[] = {{"", 0}, {"u +", 3}, {"(u", 2}, {"D(u, u)", 3}, {"delta(0)", 6}, {"mom()", 4},
               {"1/0", 2}, {"u u", 2}, {"had(u)", 5}, {"K(u", 3}};
  for (const auto& c : cases) {
    try {
      parse(c.src);
      FAIL() << c.src;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.src;
    }
  }
}

TEST(Parse, UnknownName) {
  try {
    parse("u + gamma");
    FAIL();
  } catch (const SyntaxError&) {
    FAIL() << "not a syntax error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_name);
  }
}

TEST(Parse, Structure) {
  const Node abc = parse("u . bell . chi");
  EXPECT_EQ(abc, Node::make_dot(Node::make_dot(Node::make_name("u"), Node::make_name("bell")), Node::make_name("chi")));
  const Node sum = parse("u + (chi + bell) + 2 . bern");
  ASSERT_EQ(sum.kind, K::sum);
  EXPECT_EQ(sum.children.size(), 4u);
  EXPECT_EQ(parse("  u+chi . bell "), parse("u + (chi . bell)"));
  EXPECT_EQ(parse("mom(1, -2/3, 4/6)").children[2].value, Rational(2, 3));
  EXPECT_EQ(parse("K(boolu, boolu)").children.size(), 2u);
}

TEST(Print, Canonical) {
  EXPECT_EQ(print(parse("u+chi.bell")), "u + chi . bell");
  EXPECT_EQ(print(parse("(u + chi) . bell")), "(u + chi) . bell");
  EXPECT_EQ(print(parse("u . (bell . chi)")), "u . (bell . chi)");
  EXPECT_EQ(print(parse("mom(1,1/2)")), "mom(1, 1/2)");
}

TEST(Print, RoundTrip) {
  InstanceGenerator gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Node e = random_tree(gen, 4);
    const std::string text = print(e);
    EXPECT_EQ(parse(text), e) << text;
    EXPECT_EQ(print(parse(text)), text);
  }
}

TEST(Print, LeftAssociativity) {
  const char* const atoms[] = {"eps", "u", "2", "D(bell)", "(chi + u)"};
  for (const char* a : atoms) {
    for (const char* b : atoms) {
      for (const char* c : atoms) {
        const std::string src = std::string(a) + " . " + b + " . " + c;
        const Node e = parse(src);
        ASSERT_EQ(e.kind, K::dot);
        EXPECT_EQ(e.children[0], parse(std::string(a) + " . " + b)) << src;
        EXPECT_EQ(e.children[1], parse(c)) << src;
      }
    }
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(evaluate("K(boolu, boolu)").moments(3), ints({1, 1, 0, 0}));
  EXPECT_TRUE(similar(evaluate("bern . chi"), udot(Umbra::bernoulli(), Umbra::singleton()), 10));
  EXPECT_EQ(evaluate("mom(1, 3, 9)").moments(2), ints({1, 3, 9}));
  EXPECT_EQ(evaluate("delta(2)").moments(3), ints({1, 0, 1, 0}));
  // 2 . u has moments 2^n; u . 2 is the scalar umbra as the right operand.
  EXPECT_EQ(evaluate("2 . u").moments(4), ints({1, 2, 4, 8, 16}));
  EXPECT_EQ(evaluate("u . 2").moments(4), ints({1, 2, 4, 8, 16}));
  std::vector<Rational> bells;
  for (std::size_t n = 0; n <= 8; ++n) bells.push_back(brute::bell(n));
  EXPECT_EQ(evaluate("u . bell . u").moments(8), bells);
}

TEST(Eval, CompositionChain) {
  // g . bell . D(a) is the composition umbra.
  const Umbra s = evaluate("mom(1, 2, -1/2, 3, 1/4)");
  const Umbra a = evaluate("mom(1, -1, 1/3, 2, 5)");
  EXPECT_TRUE(similar(evaluate("mom(1, 2, -1/2, 3, 1/4) . bell . D(mom(1, -1, 1/3, 2, 5))"), compose(s, deriv(a)), 4));
}

TEST(Eval, FunctionsMapToOperations) {
  const Umbra b = Umbra::bell();
  const Umbra i = Umbra::bernoulli();
  EXPECT_TRUE(similar(evaluate("D(bell)"), deriv(b), 8));
  EXPECT_TRUE(similar(evaluate("inv(bell)"), cinv(b), 8));
  EXPECT_TRUE(similar(evaluate("K(bern)"), kappa(i), 8));
  EXPECT_TRUE(similar(evaluate("L(bell, bern)"), lagrange(b, i), 8));
  EXPECT_TRUE(similar(evaluate("had(bell, bern)"), had(b, i), 8));
}

TEST(Eval, ErrorsAreTyped) {
  InstanceGenerator gen(43);
  int evaluated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Node e = random_tree(gen, 3);
    try {
      eval(e).moments(4);
      ++evaluated;
    } catch (const Error&) {
      // Any failure must be one of ours.
    }
  }
  EXPECT_GT(evaluated, 100);
}

}  // namespace
}  // namespace umbral::expr
