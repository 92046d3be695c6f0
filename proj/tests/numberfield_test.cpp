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

#include "numberfield/algebraic.hpp"
#include "numberfield/field.hpp"
#include "numeric/eval.hpp"
#include "numeric/fieldball.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "util/error.hpp"

namespace expzero {
namespace {

using nf::AlgebraicRoot;
using nf::FieldElement;
using nf::FieldPoly;
using nf::FieldPtr;
using nf::NumberField;
using nf::Rational;
using nf::Rectangle;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvariantViolation;
}

FieldPoly qpoly(const FieldPtr& f, std::vector<long> c) {
  std::vector<FieldElement> out;
  for (long v : c) out.push_back(FieldElement::rational(f, v));
  return FieldPoly(f, out);
}

TEST(NfInit, SqrtTwoBoxAroundPointFourOneFour) {
  const FieldPtr f = NumberField::create({-2, 0, 1}, {Rational(14, 10), Rational(15, 10), 0, 0});
  EXPECT_EQ(f->degree(), 2);
  // Oracle: bisection root of t^2 - 2 lies in the declared box.
  const auto r = oracle::bisect(oracle::make({-2, 0, 1}), 1, 2, 60);
  EXPECT_TRUE(nf::contains(f->box(), nf::CQ{r, 0}));
  const FieldElement t = FieldElement::generator(f);
  EXPECT_EQ(t * t, FieldElement::rational(f, 2));
}

TEST(NfInit, LinearMinpolyGivesRationals) {
  const FieldPtr f = NumberField::create({-1, 1}, {Rational(1, 2), 2, -1, 1});
  EXPECT_EQ(f->degree(), 1);
  EXPECT_TRUE(f->is_rational());
}

TEST(NfInit, Rejections) {
  EXPECT_EQ(code_of([] { NumberField::create({-1, 0, 1}, {0, 2, 0, 0}); }), ErrorCode::NotIrreducible);
  EXPECT_EQ(code_of([] { NumberField::create({4, 0, -4, 0, 1}, {1, 2, 0, 0}); }), ErrorCode::NotSquareFree);
  EXPECT_EQ(code_of([] { NumberField::create({-2, 0, 1}, {-2, 2, 0, 0}); }), ErrorCode::BoxNotIsolating);
  EXPECT_EQ(code_of([] { NumberField::create({-2, 0, 1}, {2, 3, 0, 0}); }), ErrorCode::BoxNotIsolating);
}

TEST(NfExtend, SqrtTwoThenSqrtThreeHasDegreeFour) {
  const FieldPtr q = NumberField::rationals();
  const auto e1 = nf::nf_extend(q, {-2, 0, 1}, {1, 2, 0, 0});
  const auto e2 = nf::nf_extend(e1.field, {-3, 0, 1}, {1, 2, 0, 0});
  ASSERT_EQ(e2.field->degree(), 4);
  const FieldElement s2 = e2.embedding.apply(e1.adjoined);
  const FieldElement s3 = e2.adjoined;
  EXPECT_EQ(s2 * s2, FieldElement::rational(e2.field, 2));
  EXPECT_EQ(s3 * s3, FieldElement::rational(e2.field, 3));
  // Oracle: 1, sqrt2, sqrt3, sqrt6 have rank 4 over Q, so the degree is 4.
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : {FieldElement::rational(e2.field, 1), s2, s3, s2 * s3}) rows.push_back(v.coords());
  int rank = 0;
  for (std::size_t col = 0; col < 4 && rank < 4; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < 4 && rows[piv][col] == 0) ++piv;
    if (piv == 4) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[static_cast<std::size_t>(rank)][col];
      for (std::size_t c = 0; c < 4; ++c) rows[r][c] -= f * rows[static_cast<std::size_t>(rank)][c];
    }
    ++rank;
  }
  EXPECT_EQ(rank, 4);
  // Numerically the images are the positive square roots.
  const numeric::Precision prec{64};
  for (const auto& [v, n] : {std::pair{s2, 2L}, std::pair{s3, 3L}}) {
    const Rational root = oracle::bisect(oracle::make({-n, 0, 1}), 1, 2, 200);
    EXPECT_TRUE(numeric::ball_sub(numeric::element_ball(v, prec), numeric::ComplexBall::from_rational(root, 0, prec), prec)
                    .contains_zero());
  }
}

TEST(NfExtend, SameGeneratorGivesIdentity) {
  const FieldPtr k = testing::sqrt2_field();
  const auto e = nf::nf_extend(k, {-2, 0, 1}, {1, 2, 0, 0});
  EXPECT_TRUE(nf::same_field(e.field, k));
  EXPECT_TRUE(e.embedding.is_identity());
  EXPECT_EQ(e.adjoined, FieldElement::generator(k));
  const auto neg = nf::nf_extend(k, {-2, 0, 1}, {-2, -1, 0, 0});
  EXPECT_TRUE(nf::same_field(neg.field, k));
  EXPECT_EQ(neg.adjoined, -FieldElement::generator(k));
}

TEST(NfExtend, GaussianIntegers) {
  const auto e = nf::nf_extend(NumberField::rationals(), {1, 0, 1}, {-1, 1, Rational(1, 2), 2});
  EXPECT_EQ(e.field->degree(), 2);
  EXPECT_EQ(e.adjoined * e.adjoined, FieldElement::rational(e.field, -1));
}

TEST(FieldArithmetic, SqrtTwoExamples) {
  const FieldPtr k = testing::sqrt2_field();
  const FieldElement one = FieldElement::rational(k, 1), t = FieldElement::generator(k);
  EXPECT_EQ((one + t) * (one - t), FieldElement::rational(k, -1));
  EXPECT_EQ(t.inverse(), t * Rational(1, 2));
  EXPECT_TRUE((t + (-t)).is_zero());
  EXPECT_EQ(code_of([&] { FieldElement(k).inverse(); }), ErrorCode::DivisionByZero);
}

TEST(FieldGcd, Examples) {
  const FieldPtr q = NumberField::rationals();
  EXPECT_EQ(nf::gcd(qpoly(q, {-1, 0, 1}), qpoly(q, {1, -2, 1})), qpoly(q, {-1, 1}));
  EXPECT_EQ(nf::gcd(qpoly(q, {-2, 0, 1}), qpoly(q, {-2, 0, 1})), qpoly(q, {-2, 0, 1}));
  EXPECT_EQ(nf::gcd(qpoly(q, {1, 1}), qpoly(q, {2, 1})), qpoly(q, {1}));
  EXPECT_EQ(code_of([&] { nf::gcd(FieldPoly(q), FieldPoly(q)); }), ErrorCode::ZeroPolynomial);
}

TEST(IsolateRoots, SqrtTwoAgainstBisection) {
  const auto roots = nf::isolate_roots(qpoly(NumberField::rationals(), {-2, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  const auto r = oracle::bisect(oracle::make({-2, 0, 1}), 1, 2, 100);
  EXPECT_TRUE(nf::contains(nf::refine(roots[1], Rational(1, 1 << 20)).box, nf::CQ{r, 0}));
  EXPECT_TRUE(nf::contains(nf::refine(roots[0], Rational(1, 1 << 20)).box, nf::CQ{-r, 0}));
  EXPECT_EQ(roots[0].multiplicity, 1);
  EXPECT_EQ(roots[1].multiplicity, 1);
}

TEST(IsolateRoots, DoubleRoot) {
  const auto roots = nf::isolate_roots(qpoly(NumberField::rationals(), {1, -2, 1}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_TRUE(roots[0].is_rational());
  EXPECT_EQ(roots[0].rational_value(), 1);
  EXPECT_EQ(roots[0].multiplicity, 2);
}

TEST(IsolateRoots, PlusMinusI) {
  const FieldPtr q = NumberField::rationals();
  const auto roots = nf::isolate_roots(qpoly(q, {1, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) {
    const auto e = nf::root_to_element(r, q);
    EXPECT_EQ(e.adjoined * e.adjoined, FieldElement::rational(e.field, -1));
  }
  EXPECT_LT(roots[0].box.im_hi, 0);
  EXPECT_GT(roots[1].box.im_lo, 0);
}

TEST(IsolateRoots, OverSqrtTwoField) {
  const FieldPtr k = testing::sqrt2_field();
  const FieldElement t = FieldElement::generator(k);
  // (x - sqrt2)^2 (x + 1)
  const FieldPoly lin(k, {-t, FieldElement::rational(k, 1)});
  const FieldPoly f = lin * lin * qpoly(k, {1, 1});
  const auto roots = nf::isolate_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].rational_value(), -1);
  EXPECT_EQ(roots[1].multiplicity, 2);
  EXPECT_TRUE(nf::element_is_root(t, roots[1]));
}

TEST(RootEq, Examples) {
  const auto a = nf::make_root({-2, 0, 1}, {1, 2, 0, 0});
  const auto b = nf::make_root({-4, 0, 0, 0, 1}, {1, 2, 0, 0});
  const auto c = nf::make_root({-2, 0, 1}, {-2, -1, 0, 0});
  EXPECT_TRUE(nf::root_eq(a, b));
  EXPECT_FALSE(nf::root_eq(a, c));
  EXPECT_TRUE(nf::root_eq(nf::rational_root(1), nf::make_root({-1, 1}, {0, 2, -1, 1})));
}

TEST(RootToElement, Examples) {
  const FieldPtr k = testing::sqrt2_field();
  const auto three = nf::root_to_element(nf::rational_root(3), k);
  EXPECT_TRUE(nf::same_field(three.field, k));
  EXPECT_EQ(three.adjoined, FieldElement::rational(k, 3));

  const auto s3 = nf::root_to_element(nf::make_root({-3, 0, 1}, {1, 2, 0, 0}), k);
  EXPECT_EQ(s3.field->degree(), 4);
  EXPECT_EQ(s3.adjoined * s3.adjoined, FieldElement::rational(s3.field, 3));

  const auto neg = nf::root_to_element(nf::make_root({-2, 0, 1}, {-2, -1, 0, 0}), k);
  EXPECT_TRUE(nf::same_field(neg.field, k));
  EXPECT_EQ(neg.adjoined, -FieldElement::generator(k));
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

FieldPtr field_by_index(int i) {
  switch (i) {
    case 0: return NumberField::rationals();
    case 1: return testing::sqrt2_field();
    case 2: return testing::gaussian_field();
    default: return testing::cbrt2_field();
  }
}

TEST_P(FieldAxioms, HoldExactly) {
  testing::Gen g(100 + static_cast<unsigned>(GetParam()), field_by_index(GetParam()));
  g.fractions = true;
  for (int i = 0; i < 2000; ++i) {
    const FieldElement a = g.element(), b = g.element(), c = g.element();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values(0, 1, 2, 3));

TEST_P(FieldAxioms, GeneratorBallSatisfiesMinpoly) {
  const FieldPtr f = field_by_index(GetParam());
  for (int bits : {32, 64, 128, 256}) {
    const numeric::Precision prec{bits};
    const auto z = numeric::generator_ball(f, prec);
    const auto m = FieldPoly::from_qpoly(NumberField::rationals(), nf::to_qpoly(f->minpoly()));
    EXPECT_TRUE(numeric::poly_ball(m, z, prec).contains_zero()) << bits;
  }
}

TEST(IsolateRoots, Properties) {
  testing::Gen g(7, testing::sqrt2_field());
  for (int i = 0; i < 40; ++i) {
    FieldPoly f = g.poly(4);
    if (f.degree() < 1) continue;
    if (i % 3 == 0) f = f * f;
    const auto roots = nf::isolate_roots(f);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    ASSERT_EQ(total, f.degree());
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = a + 1; b < roots.size(); ++b) ASSERT_FALSE(nf::intersects(roots[a].box, roots[b].box));
    // prod (z - r)^m encloses f(z)/lc at random points.
    const numeric::Precision prec{128};
    for (int k = 0; k < 10; ++k) {
      const FieldElement z = FieldElement::rational(f.field(), Rational(g.rnd(-20, 20), g.rnd(1, 7)));
      numeric::ComplexBall prod = numeric::ComplexBall::exact(1);
      const auto zb = numeric::element_ball(z, prec);
      for (const auto& r : roots) {
        const auto lin = numeric::ball_sub(zb, numeric::root_ball(r, prec), prec);
        for (int m = 0; m < r.multiplicity; ++m) prod = numeric::ball_mul(prod, lin, prec);
      }
      const auto exact = numeric::element_ball(f.eval(z) / f.leading(), prec);
      ASSERT_TRUE(numeric::ball_sub(prod, exact, prec).contains_zero());
    }
  }
}

TEST(RootEq, IsAnEquivalence) {
  // Roots of products sharing factors, so equal roots arrive from different polynomials.
  const FieldPtr q = NumberField::rationals();
  std::vector<AlgebraicRoot> pool;
  for (const auto& f : {qpoly(q, {-2, 0, 1}), qpoly(q, {-4, 0, 0, 0, 1}), qpoly(q, {2, 0, -3, 0, 1}), qpoly(q, {0, -1, 0, 1}),
                        qpoly(q, {1, 0, 1}), qpoly(q, {-1, 0, 0, 0, 1})}) {
    for (const auto& r : nf::isolate_roots(f)) pool.push_back(r);
  }
  for (const auto& a : pool) {
    EXPECT_TRUE(nf::root_eq(a, a));
    for (const auto& b : pool) {
      EXPECT_EQ(nf::root_eq(a, b), nf::root_eq(b, a));
      for (const auto& c : pool) {
        if (nf::root_eq(a, b) && nf::root_eq(b, c)) {
          EXPECT_TRUE(nf::root_eq(a, c));
        }
      }
    }
  }
}

TEST(FieldGcd, DividesAndKeepsCommonRoots) {
  testing::Gen g(11, testing::sqrt2_field());
  for (int i = 0; i < 60; ++i) {
    const FieldPoly common = g.poly(2);
    const FieldPoly a = g.poly(2) * common, b = g.poly(2) * common;
    const FieldPoly h = nf::gcd(a, b);
    ASSERT_TRUE(nf::divmod(a, h).second.is_zero());
    ASSERT_TRUE(nf::divmod(b, h).second.is_zero());
    ASSERT_TRUE(nf::divmod(h, common.monic()).second.is_zero());
    for (const auto& r : nf::isolate_roots(a)) {
      const auto e = nf::root_to_element(r, g.field);
      const bool in_b = e.embedding.apply(b).eval(e.adjoined).is_zero();
      const bool in_h = e.embedding.apply(h).eval(e.adjoined).is_zero();
      ASSERT_EQ(in_b, in_h);
    }
  }
}

}  // namespace
}  // namespace expzero
