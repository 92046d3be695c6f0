// Copyright 2026 The expzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "expcore/exppoly.hpp"
#include "numeric/eval.hpp"
#include "support/generators.hpp"
#include "util/error.hpp"

namespace expzero {
namespace {

using ec::ExpPoly;
using nf::FieldElement;
using nf::FieldPoly;
using nf::FieldPtr;
using nf::Rational;

const FieldPtr& Q() {
  static const FieldPtr q = nf::NumberField::rationals();
  return q;
}

ExpPoly X() { return ExpPoly::x(Q()); }
ExpPoly C(const Rational& v) { return ExpPoly::rational(Q(), v); }
ExpPoly E(const ExpPoly& p) { return ec::ep_exp(p); }

// Rebuilds p from its parts through the public constructors.
ExpPoly rebuild(const ExpPoly& p) {
  ExpPoly out(p.poly_part());
  for (const auto& t : p.terms()) out = out + ExpPoly::term(t.coeff, rebuild(*t.exponent));
  return out;
}

TEST(Multiply, MergesExponents) {
  const ExpPoly p = E(X()) * E(X() * X());
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_TRUE(p.poly_part().is_zero());
  EXPECT_EQ(*p.terms()[0].exponent, X() + X() * X());
}

TEST(Add, CancelsConstant) { EXPECT_EQ((E(X()) - C(1)) + C(1), E(X())); }

TEST(Multiply, DifferenceOfSquares) {
  EXPECT_EQ((E(X()) + C(1)) * (E(X()) - C(1)), E(C(2) * X()) - C(1));
}

TEST(Exp, OfZeroIsOne) { EXPECT_TRUE(E(ExpPoly()).is_one()); }

TEST(Exp, StoresExponentWhole) {
  const ExpPoly g = X() * C(Rational(1, 2)) + X() * X();
  const ExpPoly p = E(g);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(*p.terms()[0].exponent, g);
  EXPECT_TRUE(p.terms()[0].coeff.is_one());
}

TEST(Exp, OfConstantIsNotAFieldElement) {
  const ExpPoly p = E(C(2));
  EXPECT_EQ(p.height(), 1);
  EXPECT_TRUE(p.is_constant());
  EXPECT_FALSE(p.is_field_constant());
}

TEST(Height, Examples) {
  EXPECT_EQ((X() * X() * X() - C(2)).height(), 0);
  EXPECT_EQ((E(E(X() * C(Rational(1, 2)) + X() * X())) + X() * X() * X()).height(), 2);
  EXPECT_EQ((E(X()) + E(E(X()))).height(), 2);
}

TEST(Depth, Examples) {
  EXPECT_EQ(ec::depth(C(5)), 0);
  EXPECT_EQ(ec::depth(E(C(2)) + C(3)), 1);
  EXPECT_EQ(ec::depth(E(E(C(2)))), 2);
  try {
    ec::depth(X());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConstant);
  }
}

TEST(Equality, Examples) {
  EXPECT_EQ(E(X() + C(1)), E(C(1)) * E(X()));
  EXPECT_EQ(E(C(2) * X()), ec::pow(E(X()), 2));
  EXPECT_NE(E(X()), E(-X()));
}

TEST(EvalAt, Examples) {
  const FieldElement zero(Q()), two = FieldElement::rational(Q(), 2);
  EXPECT_TRUE(ec::eval_at(E(X()) - C(1), zero).is_zero());
  EXPECT_EQ(ec::eval_at(E(X()) - X(), zero), C(1));
  EXPECT_EQ(ec::eval_at(X() * E(X() * X()), two), C(2) * E(C(4)));
}

TEST(EvalAt, FieldPointLiftsPolynomial) {
  const FieldPtr k = testing::sqrt2_field();
  const FieldElement t = FieldElement::generator(k);
  const ExpPoly v = ec::eval_at(E(X() * X()) - E(C(2)), t);
  EXPECT_TRUE(v.is_zero());
}

TEST(CanonicalOrder, IsATotalOrder) {
  testing::Gen g(3);
  g.max_terms = 2;
  std::vector<ExpPoly> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(g.any(2));
  pool.push_back(pool[5]);
  for (const auto& a : pool) {
    EXPECT_EQ(ec::compare(a, a), 0);
    for (const auto& b : pool) {
      EXPECT_EQ(ec::compare(a, b), -ec::compare(b, a));
      EXPECT_EQ(ec::compare(a, b) == 0, a == b);
      for (const auto& c : pool) {
        if (ec::compare(a, b) < 0 && ec::compare(b, c) < 0) {
          EXPECT_LT(ec::compare(a, c), 0);
        }
      }
    }
  }
}

class RingLaws : public ::testing::TestWithParam<int> {};

TEST_P(RingLaws, HoldStructurally) {
  const FieldPtr f = GetParam() == 0 ? Q() : testing::sqrt2_field();
  testing::Gen g(20 + static_cast<unsigned>(GetParam()), f);
  g.max_degree = 2;
  g.max_terms = 2;
  for (int i = 0; i < 1000; ++i) {
    const ExpPoly p = g.any(2), q = g.any(2), r = g.any(1);
    ASSERT_EQ((p + q) + r, p + (q + r));
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_TRUE((p - p).is_zero());
    ASSERT_EQ(E(p + q), E(p) * E(q));
    ASSERT_EQ(E(p) == E(q), p == q);
    ASSERT_EQ(rebuild(p), p);
    ASSERT_LE((p * q).height(), std::max(p.height(), q.height()));
    ASSERT_EQ(E(p).height(), p.height() + 1);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RingLaws, ::testing::Values(0, 1));

TEST(EvalAt, IsAHomomorphism) {
  testing::Gen g(31, testing::sqrt2_field());
  g.max_terms = 2;
  for (int i = 0; i < 300; ++i) {
    const ExpPoly p = g.any(2), q = g.any(2);
    const FieldElement b = g.element();
    ASSERT_EQ(ec::eval_at(p * q, b), ec::eval_at(p, b) * ec::eval_at(q, b));
    ASSERT_EQ(ec::eval_at(p + q, b), ec::eval_at(p, b) + ec::eval_at(q, b));
  }
}

TEST(RingLaws, AgreeWithBallEvaluation) {
  testing::Gen g(41);
  g.max_terms = 2;
  const numeric::Precision prec{128};
  for (int i = 0; i < 200; ++i) {
    const ExpPoly p = g.any(2), q = g.any(2);
    const auto z = numeric::ComplexBall::from_rational(Rational(g.rnd(-8, 8), 7), Rational(g.rnd(-8, 8), 5), prec);
    const auto prod = numeric::eval_ball(p * q, z, prec);
    const auto sep = numeric::ball_mul(numeric::eval_ball(p, z, prec), numeric::eval_ball(q, z, prec), prec);
    ASSERT_TRUE(numeric::ball_sub(prod, sep, prec).contains_zero());
  }
}

}  // namespace
}  // namespace expzero
