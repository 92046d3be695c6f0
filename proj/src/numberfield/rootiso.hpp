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

// Certified complex root isolation for integer polynomials.
//
// Real roots are isolated with Sturm sequences and refined by bisection; they
// are reported as real intervals (im_lo == im_hi == 0) whose open interior
// holds the root, or as exact points for rational roots. Non-real roots are
// isolated in the upper half plane by quadtree subdivision: squares are
// discarded by a Pellet exclusion test, the surviving squares are grouped
// into connected components, and a component is accepted once a disk around
// it, disjoint from every other surviving square, passes the one-root Pellet
// test. Lower half plane roots are the conjugates.

#ifndef EXPZERO_NUMBERFIELD_ROOTISO_HPP
#define EXPZERO_NUMBERFIELD_ROOTISO_HPP

#include <vector>

#include "numberfield/qpoly.hpp"
#include "numberfield/rect.hpp"
#include "util/config.hpp"

namespace expzero::nf {

// Number of distinct real roots of the square-free f in (a, b].
int count_real_roots(const QPoly& f, const Rational& a, const Rational& b);

// Pellet test on the closed disk D(c, r): true when the k-th Taylor
// coefficient at c dominates, which certifies exactly k roots in the disk.
bool pellet_test(const IntPoly& f, const CQ& c, const Rational& r, int k);

// One isolating rectangle per complex root of the square-free integer
// polynomial f, sorted by (real center, imaginary center). Every root lies in
// the interior of its rectangle (relative interior for real intervals).
std::vector<Rectangle> isolate_complex_roots(const IntPoly& f, const Config& cfg = default_config());

// Shrinks an isolating rectangle of f until its size is <= target. The
// result isolates the same root and keeps it in the interior.
Rectangle refine_root_box(const IntPoly& f, const Rectangle& box, const Rational& target,
                          const Config& cfg = default_config());

CQ eval(const IntPoly& f, const CQ& z);

// Whether the root of f isolated by `iso` lies in the closed rectangle `box`.
// Roots exactly on the boundary are detected by an exact test.
bool root_in_box(const IntPoly& f, const Rectangle& iso, const Rectangle& box,
                 const Config& cfg = default_config());

// Number of roots of square-free f in the closed rectangle `box`.
int count_roots_in_box(const IntPoly& f, const Rectangle& box, const Config& cfg = default_config());

}  // namespace expzero::nf

#endif  // EXPZERO_NUMBERFIELD_ROOTISO_HPP
