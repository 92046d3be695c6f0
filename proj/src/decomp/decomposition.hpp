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

#ifndef EXPZERO_DECOMP_DECOMPOSITION_HPP
#define EXPZERO_DECOMP_DECOMPOSITION_HPP

#include <vector>

#include "expcore/exppoly.hpp"

namespace expzero::dc {

using ec::ExpPoly;
using nf::Integer;
using nf::Rational;

// coeff * x^xdeg * prod_i exp(exps[i] * bricks[i]); coeff is a constant.
struct PStarTerm {
  ExpPoly coeff;
  int xdeg = 0;
  std::vector<Rational> exps;
};

struct Decomposition {
  std::vector<ExpPoly> bricks;  // canonical order
  Integer L = 1;
  std::vector<PStarTerm> pstar;  // sorted by (exps, xdeg)
  ExpPoly source;

  // Index of the brick x/L.
  std::size_t x_brick() const;
};

// Bricks are the monomials x^k (k >= 2) and the x-dependent exponential
// parts found in exponents anywhere in p, plus x/L; linear monomials with a
// rational coefficient fold into x/L. Constant summands of exponents move
// into the p* coefficients. Bricks already come out Q-linearly independent.
Decomposition decompose(const ExpPoly& p);

// One brick set for all inputs; result i has source ps[i].
std::vector<Decomposition> decompose_shared(const std::vector<ExpPoly>& ps);

// Removes bricks that are rational combinations of the others plus a field
// constant, largest in canonical order first; x/L is always kept.
Decomposition refine(const Decomposition& d);

ExpPoly reconstruct(const Decomposition& d);

// Whether `bricks` contains some x/L and spans (modulo constants) every
// exponent occurring in the sources and in the bricks themselves.
bool covers(const std::vector<ExpPoly>& sources, const std::vector<ExpPoly>& bricks);

// Whether no nontrivial rational combination of the bricks is a field
// constant.
bool independent(const std::vector<ExpPoly>& bricks);

// The brick x/L for the given L.
ExpPoly x_over(const nf::FieldPtr& field, const Integer& L);

}  // namespace expzero::dc

#endif  // EXPZERO_DECOMP_DECOMPOSITION_HPP
