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

// Midpoint-radius complex balls with dyadic midpoints and radii. Every
// operation returns a ball containing the exact image of its inputs; midpoint
// rounding error is folded into the radius.

#ifndef EXPZERO_NUMERIC_BALL_HPP
#define EXPZERO_NUMERIC_BALL_HPP

#include <gmpxx.h>

#include <string>

#include "numberfield/rect.hpp"

namespace expzero::numeric {

using nf::CQ;
using nf::Integer;
using nf::Rational;

// man * 2^exp
struct Dyadic {
  Integer man = 0;
  long exp = 0;

  static Dyadic from_integer(const Integer& v) { return {v, 0}; }
  Rational to_rational() const;
  bool is_zero() const { return sgn(man) == 0; }
};

Dyadic operator+(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a, const Dyadic& b);
Dyadic operator*(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a);
int compare(const Dyadic& a, const Dyadic& b);
// Dyadic with at most `bits` significant bits; `err` receives an upper bound
// on the absolute rounding error.
Dyadic round_to(const Dyadic& v, int bits, Dyadic* err);
Dyadic round_up_abs(const Dyadic& v, int bits);  // >= |v|
Dyadic from_rational(const Rational& q, int bits, Dyadic* err);
Dyadic from_rational_upper(const Rational& q, int bits);  // >= q, q >= 0

struct Precision {
  int bits = 64;
};

class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(Dyadic re, Dyadic im, Dyadic rad) : re_(std::move(re)), im_(std::move(im)), rad_(std::move(rad)) {}

  static ComplexBall exact(const Integer& re, const Integer& im = 0);
  static ComplexBall from_rational(const Rational& re, const Rational& im, Precision prec);
  static ComplexBall from_rectangle(const nf::Rectangle& box, Precision prec);
  static ComplexBall whole_plane();

  const Dyadic& mid_re() const { return re_; }
  const Dyadic& mid_im() const { return im_; }
  const Dyadic& radius() const { return rad_; }
  bool is_whole_plane() const { return whole_; }

  bool contains_zero() const;
  bool contains(const CQ& z) const;
  bool excludes_zero() const { return !contains_zero(); }
  // Upper bound on |z| over the ball.
  Dyadic mag_upper() const;

  std::string to_string() const;

 private:
  Dyadic re_, im_, rad_;
  bool whole_ = false;
};

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b, Precision prec);
ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b, Precision prec);
ComplexBall ball_neg(const ComplexBall& a);
ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b, Precision prec);
ComplexBall ball_mul_rational(const ComplexBall& a, const Rational& q, Precision prec);
// exp by scaling and squaring of a Taylor sum with explicit remainder bound.
// Inputs whose radius or real part is too large to bound usefully give the
// whole-plane sentinel.
ComplexBall ball_exp(const ComplexBall& a, Precision prec);

// Upper bound on sqrt(re^2 + im^2).
Dyadic mag_upper(const Dyadic& re, const Dyadic& im);

}  // namespace expzero::numeric

#endif  // EXPZERO_NUMERIC_BALL_HPP
