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

// Dense univariate polynomials over Z and Q. Coefficients are stored lowest
// degree first; the zero polynomial is the empty vector and every other
// polynomial has a nonzero last entry.

#ifndef EXPZERO_NUMBERFIELD_QPOLY_HPP
#define EXPZERO_NUMBERFIELD_QPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace expzero::nf {

using Rational = mpq_class;
using Integer = mpz_class;
using IntPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

int degree(const QPoly& f);
int degree(const IntPoly& f);
void trim(QPoly& f);
void trim(IntPoly& f);

QPoly to_qpoly(const IntPoly& f);
// Primitive integer polynomial with positive leading coefficient that is a
// rational multiple of f. f must be nonzero.
IntPoly primitive_part(const QPoly& f);
IntPoly primitive_part(const IntPoly& f);
Integer content(const IntPoly& f);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
  QPoly g, s, t;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& f);
Rational eval(const QPoly& f, const Rational& x);
// f(a + b*t) as a polynomial in t.
QPoly compose_linear(const QPoly& f, const Rational& a, const Rational& b);
QPoly pow(const QPoly& f, int e);

Rational resultant(const QPoly& a, const QPoly& b);
// Interpolates through (xs[i], ys[i]); xs pairwise distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Yun's algorithm: f = c * prod_i parts[i]^(i+1) with every part square-free
// and pairwise coprime. Parts are primitive integer polynomials (possibly 1).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& f);
IntPoly squarefree_part(const IntPoly& f);

// Exact division test over Z: returns the quotient when b | a in Z[x].
bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient);

// Human-readable rendering in the variable `var`, highest degree first,
// e.g. "t^2 - 2".
std::string to_string(const IntPoly& f, char var = 't');

// 2^e as an exact rational.
Rational pow2(long e);

}  // namespace expzero::nf

#endif  // EXPZERO_NUMBERFIELD_QPOLY_HPP
