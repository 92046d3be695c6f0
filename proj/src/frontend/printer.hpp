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

#ifndef EXPZERO_FRONTEND_PRINTER_HPP
#define EXPZERO_FRONTEND_PRINTER_HPP

#include <string>

#include "expcore/exppoly.hpp"
#include "numberfield/algebraic.hpp"

namespace expzero::fe {

// Renderings in the input grammar; parse(print(p)) reproduces p.
std::string print(const ec::ExpPoly& p);
std::string print(const nf::FieldElement& a);
std::string print(const nf::FieldPoly& p);

// "alg(minpoly, re_lo, re_hi, im_lo, im_hi)" for the field generator.
std::string generator_literal(const nf::FieldPtr& field);

// A root as a rational literal or an alg(...) literal.
std::string print(const nf::AlgebraicRoot& r);

// q rounded to `digits` significant decimal digits.
std::string decimal(const nf::Rational& q, int digits);

// Decimal approximation with `digits` significant digits, "a" or "a + bi".
std::string approx(const nf::AlgebraicRoot& r, int digits = 20);

}  // namespace expzero::fe

#endif  // EXPZERO_FRONTEND_PRINTER_HPP
