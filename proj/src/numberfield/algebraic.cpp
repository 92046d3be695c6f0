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

#include "numberfield/algebraic.hpp"

#include <algorithm>

#include "numberfield/factor.hpp"
#include "numberfield/rootiso.hpp"
#include "numeric/fieldball.hpp"
#include "util/error.hpp"

namespace expzero::nf {

Rational AlgebraicRoot::rational_value() const {
  Rational r(-minpoly[0], minpoly[1]);
  r.canonicalize();
  return r;
}

AlgebraicRoot rational_root(const Rational& q, int multiplicity) {
  return {IntPoly{-q.get_num(), q.get_den()}, Rectangle{q, q, 0, 0}, multiplicity};
}

AlgebraicRoot make_root(const IntPoly& poly, const Rectangle& box, const Config& cfg) {
  std::vector<AlgebraicRoot> found;
  for (const auto& fac : factor(poly, cfg)) {
    for (const auto& iso : isolate_complex_roots(fac.poly, cfg)) {
      if (root_in_box(fac.poly, iso, box, cfg)) found.push_back({fac.poly, iso, fac.multiplicity});
    }
  }
  if (found.size() != 1) {
    throw Error(ErrorCode::BoxNotIsolating, "box " + to_string(box) + " holds " + std::to_string(found.size()) +
                                                " distinct roots of " + to_string(poly) + ", expected one");
  }
  return found[0];
}

AlgebraicRoot refine(const AlgebraicRoot& r, const Rational& target, const Config& cfg) {
  if (r.box.is_point() || r.box.size() <= target) return r;
  return {r.minpoly, refine_root_box(r.minpoly, r.box, target, cfg), r.multiplicity};
}

bool root_eq(const AlgebraicRoot& a, const AlgebraicRoot& b, const Config& cfg) {
  if (a.minpoly != b.minpoly) return false;
  if (a.is_rational()) return true;
  if (!intersects(a.box, b.box)) return false;
  // a.box holds exactly one root of the shared minimal polynomial, namely a.
  return root_in_box(a.minpoly, b.box, a.box, cfg);
}

bool root_less(const AlgebraicRoot& a, const AlgebraicRoot& b) {
  const CQ ca = a.box.center(), cb = b.box.center();
  if (ca.re != cb.re) return ca.re < cb.re;
  return ca.im < cb.im;
}

std::vector<AlgebraicRoot> separate(std::vector<AlgebraicRoot> roots, const Config& cfg) {
  std::vector<AlgebraicRoot> out;
  for (auto& r : roots) {
    bool dup = false;
    for (auto& o : out) {
      if (!intersects(o.box, r.box)) continue;
      if (root_eq(o, r, cfg)) {
        dup = true;
        break;
      }
      while (intersects(o.box, r.box)) {
        const Rational t = std::max(o.box.size(), r.box.size()) / 2;
        o = refine(o, t, cfg);
        r = refine(r, t, cfg);
      }
    }
    if (!dup) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

namespace {

// Roots of the irreducible q at which h vanishes, knowing there are exactly
// `count` of them.
std::vector<Rectangle> attribute(const IntPoly& q, const FieldPoly& h, int count, const Config& cfg) {
  std::vector<Rectangle> boxes = isolate_complex_roots(q, cfg);
  if (static_cast<int>(boxes.size()) == count) return boxes;
  for (int bits = 32;; bits *= 2) {
    if (bits > cfg.precision_cap_bits) {
      throw Error(ErrorCode::PrecisionCapExceeded, "could not attribute roots of the norm");
    }
    const numeric::Precision prec{bits + 16};
    std::vector<Rectangle> keep;
    for (auto& b : boxes) {
      b = refine_root_box(q, b, pow2(-bits), cfg);
      const auto val = numeric::poly_ball(h, numeric::ComplexBall::from_rectangle(b, prec), prec);
      if (val.contains_zero()) keep.push_back(b);
    }
    boxes = std::move(keep);
    if (static_cast<int>(boxes.size()) == count) return boxes;
    if (static_cast<int>(boxes.size()) < count) throw Error(ErrorCode::InvariantViolation, "root attribution lost a root");
  }
}

}  // namespace

std::vector<AlgebraicRoot> isolate_roots(const FieldPoly& f, const Config& cfg) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  std::vector<AlgebraicRoot> out;
  if (f.is_rational()) {
    for (const auto& fac : factor(primitive_part(f.to_qpoly()), cfg)) {
      for (const auto& b : isolate_complex_roots(fac.poly, cfg)) out.push_back({fac.poly, b, fac.multiplicity});
    }
    return separate(std::move(out), cfg);
  }
  const auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const FieldPoly& p = parts[i];
    if (p.degree() < 1) continue;
    for (const auto& q : irreducible_factors(norm(p), cfg)) {
      const FieldPoly h = gcd(p, FieldPoly::from_qpoly(f.field(), to_qpoly(q)));
      if (h.degree() < 1) continue;
      for (const auto& b : attribute(q, h, h.degree(), cfg)) {
        out.push_back({q, b, static_cast<int>(i) + 1});
      }
    }
  }
  return separate(std::move(out), cfg);
}

Extension root_to_element(const AlgebraicRoot& r, const FieldPtr& field, const Config& cfg) {
  if (r.is_rational()) return {field, Embedding::identity(field), FieldElement::rational(field, r.rational_value())};
  return nf_extend(field, NumberField::create_trusted(r.minpoly, r.box), cfg);
}

bool element_is_root(const FieldElement& a, const AlgebraicRoot& r, const Config& cfg) {
  if (!FieldPoly::from_qpoly(a.field(), to_qpoly(r.minpoly)).eval(a).is_zero()) return false;
  if (r.is_rational()) return true;
  // a is some root of the minimal polynomial; find which one.
  auto boxes = isolate_complex_roots(r.minpoly, cfg);
  for (int bits = 16;; bits *= 2) {
    if (bits > cfg.precision_cap_bits) throw Error(ErrorCode::PrecisionCapExceeded, "could not locate element");
    const numeric::Precision prec{bits + 16};
    const auto ball = numeric::element_ball(a, prec);
    std::vector<Rectangle> hit;
    for (auto& b : boxes) {
      b = refine_root_box(r.minpoly, b, pow2(-bits), cfg);
      const auto diff = numeric::ball_sub(numeric::ComplexBall::from_rectangle(b, prec), ball, prec);
      if (diff.contains_zero()) hit.push_back(b);
    }
    if (hit.size() == 1) return root_eq({r.minpoly, hit[0], 1}, r, cfg);
    boxes = std::move(hit);
  }
}

}  // namespace expzero::nf
