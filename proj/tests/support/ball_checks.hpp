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

// Containment checks for the ball layer against exact rational images and
// MPFR at four times the working precision.

#ifndef EXPZERO_TESTS_SUPPORT_BALL_CHECKS_HPP
#define EXPZERO_TESTS_SUPPORT_BALL_CHECKS_HPP

#include <mpfr.h>

#include <random>
#include <string>

#include "numeric/ball.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace expzero::oracle {

// exp(re + i im) at `bits` bits of precision, with a bound on the absolute
// error of each component.
struct ComplexApprox {
  Q re, im, err;
};

inline ComplexApprox exp_complex(const Q& re, const Q& im, int bits) {
  mpfr_t a, b, ea, c, s;
  const mpfr_prec_t p = bits + 32;
  mpfr_inits2(p, a, b, ea, c, s, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(a, re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(b, im.get_mpq_t(), MPFR_RNDN);
  mpfr_exp(ea, a, MPFR_RNDN);
  mpfr_cos(c, b, MPFR_RNDN);
  mpfr_sin(s, b, MPFR_RNDN);
  mpfr_mul(c, c, ea, MPFR_RNDN);
  mpfr_mul(s, s, ea, MPFR_RNDN);
  ComplexApprox out;
  mpfr_get_q(out.re.get_mpq_t(), c);
  mpfr_get_q(out.im.get_mpq_t(), s);
  // Rounding of the inputs and of three operations, generously bounded.
  mpfr_get_q(out.err.get_mpq_t(), ea);
  out.err = (abs(out.err) + 1) * Q(1, Z(1) << (bits - 2));
  mpfr_clears(a, b, ea, c, s, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace expzero::oracle

namespace expzero::props {

using nf::CQ;
using numeric::ComplexBall;
using numeric::Dyadic;
using numeric::Precision;

struct BallCase {
  ComplexBall ball;
  CQ point;  // a point inside `ball`
};

inline Dyadic random_dyadic(std::mt19937_64& rng, long span_bits, long exp) {
  std::uniform_int_distribution<long> d(-(1L << span_bits), 1L << span_bits);
  return Dyadic{nf::Integer(d(rng)), exp};
}

inline BallCase random_ball(std::mt19937_64& rng, long mid_span, long mid_exp) {
  Dyadic re = random_dyadic(rng, mid_span, mid_exp), im = random_dyadic(rng, mid_span, mid_exp);
  std::uniform_int_distribution<long> rad(0, 1L << 12);
  std::uniform_int_distribution<int> pick(0, 3);
  Dyadic r{pick(rng) == 0 ? nf::Integer(0) : nf::Integer(rad(rng)), -40};
  std::uniform_int_distribution<long> unit(-1000, 1000);
  Rational u, v;
  do {
    u = Rational(unit(rng), 1000);
    v = Rational(unit(rng), 1000);
  } while (u * u + v * v > 1);
  const Rational rr = r.to_rational();
  CQ point{re.to_rational() + u * rr, im.to_rational() + v * rr};
  return {ComplexBall(re, im, r), point};
}

inline Precision random_precision(std::mt19937_64& rng) {
  static const int choices[] = {16, 24, 53, 64, 128, 256};
  return Precision{choices[std::uniform_int_distribution<int>(0, 5)(rng)]};
}

inline bool radius_ok(const ComplexBall& b) { return b.is_whole_plane() || sgn(b.radius().man) >= 0; }

// Op names: add, sub, neg, mul, mul_rational, exp.
inline Outcome ball_containment(const std::string& op, std::size_t n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    ++out.cases;
    const Precision prec = random_precision(rng);
    const bool is_exp = op == "exp";
    const BallCase a = is_exp ? random_ball(rng, 20, -18) : random_ball(rng, 30, -20);
    const BallCase b = random_ball(rng, 30, -20);
    ComplexBall res;
    CQ image;
    if (op == "add") {
      res = numeric::ball_add(a.ball, b.ball, prec);
      image = a.point + b.point;
    } else if (op == "sub") {
      res = numeric::ball_sub(a.ball, b.ball, prec);
      image = a.point - b.point;
    } else if (op == "neg") {
      res = numeric::ball_neg(a.ball);
      image = CQ{-a.point.re, -a.point.im};
    } else if (op == "mul") {
      res = numeric::ball_mul(a.ball, b.ball, prec);
      image = a.point * b.point;
    } else if (op == "mul_rational") {
      const Rational q(std::uniform_int_distribution<long>(-1000, 1000)(rng), std::uniform_int_distribution<long>(1, 999)(rng));
      res = numeric::ball_mul_rational(a.ball, q, prec);
      image = CQ{a.point.re * q, a.point.im * q};
    } else {
      res = numeric::ball_exp(a.ball, prec);
      if (!radius_ok(res)) {
        out.fail("negative radius");
        continue;
      }
      if (res.is_whole_plane()) continue;
      const auto w = oracle::exp_complex(a.point.re, a.point.im, 4 * prec.bits);
      const Rational slack = res.radius().to_rational() - 2 * w.err;
      const Rational dr = w.re - res.mid_re().to_rational(), di = w.im - res.mid_im().to_rational();
      if (sgn(slack) < 0 || dr * dr + di * di > slack * slack) out.fail(res.to_string());
      continue;
    }
    if (!radius_ok(res) || !res.contains(image)) out.fail(op + " " + res.to_string());
  }
  return out;
}

// ball_exp(1) at two precisions against the series value of e.
inline Outcome e_fifty_digits() {
  Outcome out;
  out.cases = 2;
  const std::string digits = oracle::e_digits(50);
  const Rational lo(nf::Integer(digits.substr(0, 1) + digits.substr(2)), nf::Integer("1" + std::string(50, '0')));
  const Rational hi = lo + Rational(1, nf::Integer("1" + std::string(50, '0')));
  const ComplexBall one = ComplexBall::exact(1);
  // Coarse ball: contains the 50-digit value outright.
  const ComplexBall coarse = numeric::ball_exp(one, Precision{64});
  if (!coarse.contains(CQ{lo, 0})) out.fail("64-bit ball misses " + digits);
  // Fine ball: lies inside the 50-digit interval, so its digits agree.
  const ComplexBall fine = numeric::ball_exp(one, Precision{256});
  const Rational m = fine.mid_re().to_rational(), r = fine.radius().to_rational();
  if (m - r < lo || m + r > hi || abs(fine.mid_im().to_rational()) > r) out.fail("256-bit ball " + fine.to_string());
  return out;
}

}  // namespace expzero::props

#endif  // EXPZERO_TESTS_SUPPORT_BALL_CHECKS_HPP
