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

#ifndef EXPZERO_NUMBERFIELD_ALGEBRAIC_HPP
#define EXPZERO_NUMBERFIELD_ALGEBRAIC_HPP

#include <optional>
#include <vector>

#include "numberfield/field.hpp"

namespace expzero::nf {

// A complex algebraic number: its minimal polynomial over Q together with a
// rectangle holding no other root of it. Rational roots carry a point box.
struct AlgebraicRoot {
  IntPoly minpoly;
  Rectangle box;
  int multiplicity = 1;

  bool is_rational() const { return degree(minpoly) == 1; }
  Rational rational_value() const;  // requires is_rational()
};

AlgebraicRoot rational_root(const Rational& q, int multiplicity = 1);

// The root of an arbitrary nonzero integer polynomial that lies in `box`.
// Throws BoxNotIsolating unless exactly one distinct root is inside.
AlgebraicRoot make_root(const IntPoly& poly, const Rectangle& box, const Config& cfg = default_config());

// The same root with a box no larger than `target`.
AlgebraicRoot refine(const AlgebraicRoot& r, const Rational& target, const Config& cfg = default_config());

bool root_eq(const AlgebraicRoot& a, const AlgebraicRoot& b, const Config& cfg = default_config());

// Deterministic order: by box center, real part first. Boxes of distinct
// roots must be disjoint.
bool root_less(const AlgebraicRoot& a, const AlgebraicRoot& b);

// Distinct complex roots of f with multiplicities, in root_less order and
// with pairwise disjoint boxes.
std::vector<AlgebraicRoot> isolate_roots(const FieldPoly& f, const Config& cfg = default_config());

// Makes boxes of distinct roots pairwise disjoint; equal roots are merged
// and their multiplicities kept from the first occurrence.
std::vector<AlgebraicRoot> separate(std::vector<AlgebraicRoot> roots, const Config& cfg = default_config());

// Coordinates of r in `field`, extending the field when r is not in it.
Extension root_to_element(const AlgebraicRoot& r, const FieldPtr& field, const Config& cfg = default_config());

// Whether `a` (an element of its field) is the algebraic number r.
bool element_is_root(const FieldElement& a, const AlgebraicRoot& r, const Config& cfg = default_config());

}  // namespace expzero::nf

#endif  // EXPZERO_NUMBERFIELD_ALGEBRAIC_HPP
