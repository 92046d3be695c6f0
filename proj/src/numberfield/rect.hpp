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

#ifndef EXPZERO_NUMBERFIELD_RECT_HPP
#define EXPZERO_NUMBERFIELD_RECT_HPP

#include <string>

#include "numberfield/qpoly.hpp"

namespace expzero::nf {

// Exact complex rational.
struct CQ {
  Rational re, im;
};

CQ operator+(const CQ& a, const CQ& b);
CQ operator-(const CQ& a, const CQ& b);
CQ operator*(const CQ& a, const CQ& b);
CQ operator/(const CQ& a, const CQ& b);
bool is_zero(const CQ& z);
Rational norm_sq(const CQ& z);
// Rigorous dyadic bounds on |z| with roughly `bits` bits of accuracy.
Rational abs_upper(const CQ& z, int bits = 64);
Rational abs_lower(const CQ& z, int bits = 64);

// Closed axis-aligned rectangle. A rectangle with im_lo == im_hi == 0 is a
// real interval; one with both sides degenerate is an exact point.
struct Rectangle {
  Rational re_lo, re_hi, im_lo, im_hi;

  bool operator==(const Rectangle& o) const = default;

  Rational width() const { return re_hi - re_lo; }
  Rational height() const { return im_hi - im_lo; }
  Rational size() const;  // max(width, height)
  CQ center() const;
  bool is_real_interval() const { return sgn(im_lo) == 0 && sgn(im_hi) == 0; }
  bool is_point() const { return re_lo == re_hi && im_lo == im_hi; }
  Rectangle conjugate() const { return {re_lo, re_hi, -im_hi, -im_lo}; }
};

bool intersects(const Rectangle& a, const Rectangle& b);
bool contains(const Rectangle& outer, const Rectangle& inner);
bool contains(const Rectangle& r, const CQ& z);
Rectangle hull(const Rectangle& a, const Rectangle& b);
Rectangle intersection(const Rectangle& a, const Rectangle& b);  // assumes intersects
std::string to_string(const Rectangle& r);

}  // namespace expzero::nf

#endif  // EXPZERO_NUMBERFIELD_RECT_HPP
