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

#include "numeric/ball.hpp"

#include <sstream>

namespace expzero::numeric {
namespace {

long bit_length(const Integer& v) {
  if (sgn(v) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Integer shl(const Integer& v, long s) {
  Integer out;
  mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(s));
  return out;
}

constexpr int kRadiusBits = 32;

Dyadic rad_sum(const Dyadic& a, const Dyadic& b) { return round_up_abs(a + b, kRadiusBits); }

}  // namespace

Rational Dyadic::to_rational() const {
  if (exp >= 0) return Rational(shl(man, exp));
  Rational out(man, shl(Integer(1), -exp));
  out.canonicalize();
  return out;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exp == b.exp) return {a.man + b.man, a.exp};
  if (a.exp < b.exp) return {a.man + shl(b.man, b.exp - a.exp), a.exp};
  return {shl(a.man, a.exp - b.exp) + b.man, b.exp};
}

Dyadic operator-(const Dyadic& a) { return {-a.man, a.exp}; }
Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
Dyadic operator*(const Dyadic& a, const Dyadic& b) { return {a.man * b.man, a.exp + b.exp}; }

int compare(const Dyadic& a, const Dyadic& b) {
  const Dyadic d = a - b;
  return sgn(d.man);
}

Dyadic round_to(const Dyadic& v, int bits, Dyadic* err) {
  const long nb = bit_length(v.man);
  if (nb <= bits) {
    if (err) *err = Dyadic{};
    return v;
  }
  const long s = nb - bits;
  Integer q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), v.man.get_mpz_t(), static_cast<unsigned long>(s));
  if (err) *err = Dyadic{1, v.exp + s};
  return {q, v.exp + s};
}

Dyadic round_up_abs(const Dyadic& v, int bits) {
  Integer m = abs(v.man);
  const long nb = bit_length(m);
  if (nb <= bits) return {m, v.exp};
  const long s = nb - bits;
  Integer q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(s));
  return {q, v.exp + s};
}

Dyadic from_rational(const Rational& q, int bits, Dyadic* err) {
  if (sgn(q) == 0) {
    if (err) *err = Dyadic{};
    return {};
  }
  const long k = bits - (bit_length(q.get_num()) - bit_length(q.get_den())) + 1;
  Integer num = q.get_num(), den = q.get_den();
  if (k >= 0)
    num = shl(num, k);
  else
    den = shl(den, -k);
  Integer m, r;
  mpz_fdiv_qr(m.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (err) *err = sgn(r) == 0 ? Dyadic{} : Dyadic{1, -k};
  return {m, -k};
}

Dyadic from_rational_upper(const Rational& q, int bits) {
  Dyadic err;
  Dyadic d = from_rational(q, bits, &err);
  return round_up_abs(d + err, bits);
}

Dyadic mag_upper(const Dyadic& re, const Dyadic& im) {
  if (re.is_zero()) return round_up_abs(im, 64);
  if (im.is_zero()) return round_up_abs(re, 64);
  const long e = std::min(re.exp, im.exp);
  const Integer a = shl(re.man, re.exp - e), b = shl(im.man, im.exp - e);
  Integer s = shl(a * a + b * b, 64);
  Integer r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t());
  if (sgn(rem) != 0) r += 1;
  return round_up_abs(Dyadic{r, e - 32}, 64);
}

ComplexBall ComplexBall::exact(const Integer& re, const Integer& im) {
  return {Dyadic{re, 0}, Dyadic{im, 0}, Dyadic{}};
}

ComplexBall ComplexBall::from_rational(const Rational& re, const Rational& im, Precision prec) {
  Dyadic er, ei;
  Dyadic r = numeric::from_rational(re, prec.bits, &er);
  Dyadic i = numeric::from_rational(im, prec.bits, &ei);
  return {r, i, rad_sum(er, ei)};
}

ComplexBall ComplexBall::from_rectangle(const nf::Rectangle& box, Precision prec) {
  const CQ c = box.center();
  ComplexBall b = from_rational(c.re, c.im, prec);
  // Half diagonal <= (width + height) / 2.
  const Rational half = (box.width() + box.height()) / 2;
  b.rad_ = rad_sum(b.rad_, from_rational_upper(half, kRadiusBits));
  return b;
}

ComplexBall ComplexBall::whole_plane() {
  ComplexBall b;
  b.whole_ = true;
  return b;
}

bool ComplexBall::contains_zero() const {
  if (whole_) return true;
  const Dyadic m2 = re_ * re_ + im_ * im_;
  return compare(m2, rad_ * rad_) <= 0;
}

bool ComplexBall::contains(const CQ& z) const {
  if (whole_) return true;
  const Rational dr = z.re - re_.to_rational(), di = z.im - im_.to_rational();
  const Rational r = rad_.to_rational();
  return dr * dr + di * di <= r * r;
}

Dyadic ComplexBall::mag_upper() const { return rad_sum(numeric::mag_upper(re_, im_), rad_); }

std::string ComplexBall::to_string() const {
  if (whole_) return "[whole plane]";
  std::ostringstream os;
  os.precision(17);
  os << "(" << re_.to_rational().get_d() << " + " << im_.to_rational().get_d() << "i) +/- "
     << rad_.to_rational().get_d();
  return os.str();
}

ComplexBall ball_neg(const ComplexBall& a) {
  if (a.is_whole_plane()) return a;
  return {-a.mid_re(), -a.mid_im(), a.radius()};
}

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b, Precision prec) {
  if (a.is_whole_plane() || b.is_whole_plane()) return ComplexBall::whole_plane();
  Dyadic er, ei;
  Dyadic re = round_to(a.mid_re() + b.mid_re(), prec.bits, &er);
  Dyadic im = round_to(a.mid_im() + b.mid_im(), prec.bits, &ei);
  Dyadic rad = rad_sum(rad_sum(a.radius(), b.radius()), rad_sum(er, ei));
  return {re, im, rad};
}

ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b, Precision prec) {
  return ball_add(a, ball_neg(b), prec);
}

ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b, Precision prec) {
  if (a.is_whole_plane() || b.is_whole_plane()) return ComplexBall::whole_plane();
  Dyadic er, ei;
  Dyadic re = round_to(a.mid_re() * b.mid_re() - a.mid_im() * b.mid_im(), prec.bits, &er);
  Dyadic im = round_to(a.mid_re() * b.mid_im() + a.mid_im() * b.mid_re(), prec.bits, &ei);
  const Dyadic ma = mag_upper(a.mid_re(), a.mid_im());
  const Dyadic mb = mag_upper(b.mid_re(), b.mid_im());
  Dyadic rad = rad_sum(ma * b.radius(), mb * a.radius());
  rad = rad_sum(rad, a.radius() * b.radius());
  rad = rad_sum(rad, rad_sum(er, ei));
  return {re, im, rad};
}

ComplexBall ball_mul_rational(const ComplexBall& a, const Rational& q, Precision prec) {
  return ball_mul(a, ComplexBall::from_rational(q, 0, Precision{prec.bits + 8}), prec);
}

ComplexBall ball_exp(const ComplexBall& a, Precision prec) {
  if (a.is_whole_plane()) return a;
  const Rational r = a.radius().to_rational();
  if (r > 8) return ComplexBall::whole_plane();
  const Dyadic m = numeric::mag_upper(a.mid_re(), a.mid_im());
  const long mbits = bit_length(m.man) + m.exp;  // |mid| < 2^mbits
  if (mbits > 20) return ComplexBall::whole_plane();
  const long s = std::max(0L, mbits + 1);
  const int wp = prec.bits + 20 + static_cast<int>(s);
  const Precision wprec{wp};

  const ComplexBall w{Dyadic{a.mid_re().man, a.mid_re().exp - s}, Dyadic{a.mid_im().man, a.mid_im().exp - s}, Dyadic{}};
  ComplexBall sum = ComplexBall::exact(1);
  const Rational wu = numeric::mag_upper(w.mid_re(), w.mid_im()).to_rational();
  if (sgn(wu) != 0) {
    ComplexBall term = ComplexBall::exact(1);
    Rational bound = 1;
    Rational eps(Integer(1), shl(Integer(1), wp));
    for (long k = 1;; ++k) {
      term = ball_mul_rational(ball_mul(term, w, wprec), Rational(1, k), wprec);
      sum = ball_add(sum, term, wprec);
      bound = bound * wu / k;
      const Rational next = bound * wu / (k + 1);
      // |w| <= 1/2 so the tail is at most twice its first term.
      if (next * 2 < eps) {
        const Dyadic tail = from_rational_upper(next * 2, kRadiusBits);
        sum = ComplexBall{sum.mid_re(), sum.mid_im(), rad_sum(sum.radius(), tail)};
        break;
      }
    }
  }
  for (long i = 0; i < s; ++i) sum = ball_mul(sum, sum, wprec);
  if (sgn(r) > 0) {
    // |exp(z) - exp(mid)| <= |exp(mid)| (e^r - 1) <= |exp(mid)| r 3^ceil(r).
    Integer rc;
    mpz_cdiv_q(rc.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Integer three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, rc.get_ui());
    const Rational extra = sum.mag_upper().to_rational() * r * Rational(three);
    sum = ComplexBall{sum.mid_re(), sum.mid_im(), rad_sum(sum.radius(), from_rational_upper(extra, kRadiusBits))};
  }
  Dyadic er, ei;
  Dyadic re = round_to(sum.mid_re(), prec.bits, &er);
  Dyadic im = round_to(sum.mid_im(), prec.bits, &ei);
  return {re, im, rad_sum(sum.radius(), rad_sum(er, ei))};
}

}  // namespace expzero::numeric
