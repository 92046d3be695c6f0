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

#include "numberfield/rect.hpp"

#include <algorithm>

#include "util/error.hpp"

namespace expzero::nf {

CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
CQ operator*(const CQ& a, const CQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CQ operator/(const CQ& a, const CQ& b) {
  const Rational d = norm_sq(b);
  if (sgn(d) == 0) throw Error(ErrorCode::DivisionByZero, "complex division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
bool is_zero(const CQ& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
Rational norm_sq(const CQ& z) { return z.re * z.re + z.im * z.im; }

namespace {

// floor(log2 q) for q > 0, up to +-1.
long approx_log2(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

Rational sqrt_bound(const Rational& s, int bits, bool upper) {
  if (sgn(s) == 0) return 0;
  const long k = bits + std::max(0L, -approx_log2(s) / 2 + 1);
  Integer scaled_num = s.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), static_cast<unsigned long>(2 * k));
  Integer n;
  if (upper)
    mpz_cdiv_q(n.get_mpz_t(), scaled_num.get_mpz_t(), s.get_den_mpz_t());
  else
    mpz_fdiv_q(n.get_mpz_t(), scaled_num.get_mpz_t(), s.get_den_mpz_t());
  Integer r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (upper && sgn(rem) != 0) r += 1;
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
  Rational out(r, den);
  out.canonicalize();
  return out;
}

}  // namespace

Rational abs_upper(const CQ& z, int bits) { return sqrt_bound(norm_sq(z), bits, true); }
Rational abs_lower(const CQ& z, int bits) { return sqrt_bound(norm_sq(z), bits, false); }

Rational Rectangle::size() const {
  Rational w = width(), h = height();
  return w > h ? w : h;
}

CQ Rectangle::center() const { return {(re_lo + re_hi) / 2, (im_lo + im_hi) / 2}; }

bool intersects(const Rectangle& a, const Rectangle& b) {
  return a.re_lo <= b.re_hi && b.re_lo <= a.re_hi && a.im_lo <= b.im_hi && b.im_lo <= a.im_hi;
}

bool contains(const Rectangle& outer, const Rectangle& inner) {
  return outer.re_lo <= inner.re_lo && inner.re_hi <= outer.re_hi && outer.im_lo <= inner.im_lo &&
         inner.im_hi <= outer.im_hi;
}

bool contains(const Rectangle& r, const CQ& z) {
  return r.re_lo <= z.re && z.re <= r.re_hi && r.im_lo <= z.im && z.im <= r.im_hi;
}

Rectangle hull(const Rectangle& a, const Rectangle& b) {
  return {std::min(a.re_lo, b.re_lo), std::max(a.re_hi, b.re_hi), std::min(a.im_lo, b.im_lo),
          std::max(a.im_hi, b.im_hi)};
}

Rectangle intersection(const Rectangle& a, const Rectangle& b) {
  return {std::max(a.re_lo, b.re_lo), std::min(a.re_hi, b.re_hi), std::max(a.im_lo, b.im_lo),
          std::min(a.im_hi, b.im_hi)};
}

std::string to_string(const Rectangle& r) {
  return "[" + r.re_lo.get_str() + ", " + r.re_hi.get_str() + "] x [" + r.im_lo.get_str() + ", " +
         r.im_hi.get_str() + "]";
}

}  // namespace expzero::nf
