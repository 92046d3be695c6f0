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

#include "frontend/parser.hpp"
#include "numeric/eval.hpp"
#include "numeric/fieldball.hpp"
#include "support/oracles.hpp"
#include "support/ball_checks.hpp"

namespace expzero {
namespace {

using nf::CQ;
using nf::Rational;
using numeric::ComplexBall;
using numeric::Dyadic;
using numeric::Precision;

Rational pow2(long e) { return e >= 0 ? Rational(nf::Integer(1) << e) : Rational(1, nf::Integer(1) << -e); }

TEST(BallOps, Examples) {
  const Precision p{64};
  const ComplexBall s = numeric::ball_add(ComplexBall::exact(1), ComplexBall::exact(2), p);
  EXPECT_TRUE(s.contains(CQ{3, 0}));
  const ComplexBall i = ComplexBall::exact(0, 1);
  const ComplexBall sq = numeric::ball_mul(i, i, p);
  EXPECT_TRUE(sq.contains(CQ{-1, 0}));
  EXPECT_GE(sgn(sq.radius().man), 0);
  EXPECT_TRUE(numeric::ball_neg(i).contains(CQ{0, -1}));
}

TEST(BallExp, OfZero) {
  for (int bits : {16, 64, 200}) {
    const ComplexBall b = numeric::ball_exp(ComplexBall::exact(0), Precision{bits});
    EXPECT_TRUE(b.contains(CQ{1, 0}));
    EXPECT_LE(b.radius().to_rational(), pow2(1 - bits));
  }
}

TEST(BallExp, OfOneMatchesSeries) {
  const auto o = props::e_fifty_digits();
  EXPECT_TRUE(o.ok()) << o.first;
  EXPECT_EQ(oracle::e_digits(20), "2.71828182845904523536");
}

TEST(BallExp, OfIPiIsMinusOne) {
  const Rational pi = oracle::pi(300);
  for (int bits : {64, 128, 256}) {
    const ComplexBall b = numeric::ball_exp(ComplexBall::from_rational(0, pi, Precision{bits}), Precision{bits});
    // exp(i*pi_approx) is within 2^-300 of -1
    const Rational dr = b.mid_re().to_rational() + 1, di = b.mid_im().to_rational();
    const Rational reach = b.radius().to_rational() + pow2(-299);
    EXPECT_LE(dr * dr + di * di, reach * reach) << bits;
  }
}

TEST(BallExp, HugeInputGivesWholePlane) {
  const ComplexBall b = numeric::ball_exp(ComplexBall(Dyadic{1, 80}, Dyadic{0, 0}, Dyadic{0, 0}), Precision{64});
  EXPECT_TRUE(b.is_whole_plane());
  EXPECT_TRUE(b.contains(CQ{123, 4}));
}

TEST(EvalBall, Examples) {
  const Precision p{64};
  const ComplexBall z = numeric::eval_ball(fe::parse("exp(x) - 1"), ComplexBall::exact(0), p);
  EXPECT_TRUE(z.contains_zero());
  EXPECT_LE(z.radius().to_rational(), pow2(-60));
  const ComplexBall one = numeric::eval_ball(fe::parse("exp(x) - x"), ComplexBall::exact(0), p);
  EXPECT_TRUE(one.excludes_zero());
  EXPECT_TRUE(one.contains(CQ{1, 0}));
  const auto sqrt2 = nf::make_root({-2, 0, 1}, {1, 2, 0, 0});
  const Precision p128{128};
  EXPECT_TRUE(numeric::eval_ball(fe::parse("(x^2-2)(exp(x^2) - exp(2x))"), numeric::root_ball(sqrt2, p128), p128)
                  .contains_zero());
}

TEST(EvalBall, RadiusShrinksWithPrecision) {
  const auto sqrt2 = nf::make_root({-2, 0, 1}, {1, 2, 0, 0});
  for (const char* s : {"exp(x) - x", "exp(exp(x/2 + x^2)) + x^3", "(x^2-2)exp(x^2) - (x^2-2)exp(2x)"}) {
    const auto p = fe::parse(s);
    Rational prev = -1;
    for (int bits : {64, 128, 256}) {
      const Precision prec{bits};
      const Rational r = numeric::eval_ball(p, numeric::root_ball(sqrt2, prec), prec).radius().to_rational();
      if (prev >= 0) {
        EXPECT_LE(2 * r, prev) << s << " at " << bits;
      }
      prev = r;
    }
  }
}

TEST(RootBall, Examples) {
  const ComplexBall three = numeric::root_ball(nf::rational_root(3), Precision{64});
  EXPECT_TRUE(three.contains(CQ{3, 0}));
  EXPECT_TRUE(three.radius().is_zero());

  const auto p = oracle::make({-2, 0, 1});
  const Rational s = oracle::bisect(p, 1, 2, 80);
  const ComplexBall b = numeric::root_ball(nf::make_root({-2, 0, 1}, {1, 2, 0, 0}), Precision{64});
  EXPECT_LE(b.radius().to_rational(), pow2(-32));
  const Rational d = b.mid_re().to_rational() - s;
  EXPECT_LE(abs(d), b.radius().to_rational() + pow2(-79));
  EXPECT_TRUE(b.contains(CQ{Rational(141421356237, 100000000000), 0}));

  const ComplexBall m = numeric::root_ball(nf::make_root({-2, 0, 1}, {-2, -1, 0, 0}), Precision{64});
  const Rational gap = b.mid_re().to_rational() - m.mid_re().to_rational();
  EXPECT_GT(gap, b.radius().to_rational() + m.radius().to_rational());
}

TEST(CertifyNonzero, Examples) {
  const auto zero = nf::rational_root(0);
  EXPECT_TRUE(numeric::certify_nonzero(fe::parse("exp(x) - x"), zero, Precision{256}));
  EXPECT_FALSE(numeric::certify_nonzero(fe::parse("exp(x) - 1"), zero, Precision{256}));
  EXPECT_TRUE(numeric::certify_nonzero(fe::parse("exp(1) + exp(2) - 2exp(1)"), Precision{64}));
}

TEST(FieldBall, GeneratorOfSqrtTwo) {
  const ComplexBall g = numeric::generator_ball(testing::sqrt2_field(), Precision{128});
  const ComplexBall sq = numeric::ball_mul(g, g, Precision{128});
  EXPECT_TRUE(sq.contains(CQ{2, 0}));
}

class Containment : public ::testing::TestWithParam<const char*> {};

TEST_P(Containment, ThousandCases) {
  const auto o = props::ball_containment(GetParam(), 1000, 7);
  EXPECT_EQ(o.cases, 1000u);
  EXPECT_TRUE(o.ok()) << o.failures << " failures, first: " << o.first;
}

INSTANTIATE_TEST_SUITE_P(Ops, Containment, ::testing::Values("add", "sub", "neg", "mul", "mul_rational", "exp"));

}  // namespace
}  // namespace expzero
