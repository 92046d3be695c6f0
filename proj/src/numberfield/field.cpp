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

#include "numberfield/field.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "numberfield/factor.hpp"
#include "numberfield/linalg.hpp"
#include "numberfield/rootiso.hpp"
#include "util/error.hpp"

namespace expzero::nf {
namespace {

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw Error(ErrorCode::FieldMismatch, "operands live in different number fields");
}

// Lifts a Q-element into `to` when the two fields differ only because one
// side is Q.
bool promote(const FieldElement& a, const FieldPtr& to, FieldElement& out) {
  if (same_field(a.field(), to)) {
    out = a;
    return true;
  }
  if (a.field()->is_rational()) {
    out = FieldElement::rational(to, a.coords()[0]);
    return true;
  }
  return false;
}

std::pair<FieldElement, FieldElement> unify(const FieldElement& a, const FieldElement& b) {
  if (same_field(a.field(), b.field())) return {a, b};
  FieldElement x(a.field()), y(b.field());
  if (promote(b, a.field(), y)) return {a, y};
  if (promote(a, b.field(), x)) return {x, b};
  throw Error(ErrorCode::FieldMismatch, "operands live in different number fields");
}

QPoly as_qpoly(const std::vector<Rational>& c) {
  QPoly p = c;
  trim(p);
  return p;
}

// Reduces p modulo the monic polynomial m into exactly deg(m) coordinates.
std::vector<Rational> reduce(QPoly p, const QPoly& m) {
  const int n = degree(m);
  for (int i = degree(p); i >= n; --i) {
    const Rational c = p[i];
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= n; ++j) p[i - n + j] -= c * m[j];
  }
  p.resize(n, Rational(0));
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

NumberField::NumberField(IntPoly minpoly, Rectangle box, Rectangle iso)
    : minpoly_(std::move(minpoly)), monic_(monic(to_qpoly(minpoly_))), box_(std::move(box)), iso_(std::move(iso)), best_(iso_) {}

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField(IntPoly{0, 1}, Rectangle{0, 0, 0, 0}, Rectangle{0, 0, 0, 0}));
  return q;
}

FieldPtr NumberField::create(const IntPoly& minpoly_in, const Rectangle& box, const Config& cfg) {
  IntPoly f = minpoly_in;
  trim(f);
  if (f.empty() || degree(f) < 1) throw Error(ErrorCode::BadAlgebraicConstant, "minimal polynomial must have degree >= 1");
  if (box.re_lo > box.re_hi || box.im_lo > box.im_hi) {
    throw Error(ErrorCode::BoxNotIsolating, "box has inverted bounds");
  }
  f = primitive_part(f);
  if (degree(f) == 1) {
    Rational r(-f[0], f[1]);
    r.canonicalize();
    if (!contains(box, CQ{r, 0})) throw Error(ErrorCode::BoxNotIsolating, "box does not contain the root " + r.get_str());
    return rationals();
  }
  if (degree(f) > cfg.irreducibility_degree_cap) {
    throw Error(ErrorCode::DegreeCapExceeded, "minimal polynomial degree " + std::to_string(degree(f)) +
                                                  " exceeds the irreducibility cap " +
                                                  std::to_string(cfg.irreducibility_degree_cap));
  }
  if (degree(squarefree_part(f)) != degree(f)) {
    throw Error(ErrorCode::NotSquareFree, "minimal polynomial " + to_string(f) + " is not square-free");
  }
  if (!is_irreducible(f, cfg)) {
    throw Error(ErrorCode::NotIrreducible, "minimal polynomial " + to_string(f) + " is reducible over Q");
  }
  Rectangle found;
  int hits = 0;
  for (const auto& iso : isolate_complex_roots(f, cfg)) {
    if (root_in_box(f, iso, box, cfg)) {
      found = iso;
      ++hits;
    }
  }
  if (hits != 1) {
    throw Error(ErrorCode::BoxNotIsolating, "box " + to_string(box) + " contains " + std::to_string(hits) +
                                                " roots of " + to_string(f) + ", expected exactly one");
  }
  return FieldPtr(new NumberField(f, box, found));
}

FieldPtr NumberField::create_trusted(const IntPoly& minpoly, const Rectangle& iso) {
  if (degree(minpoly) == 1) return rationals();
  return FieldPtr(new NumberField(primitive_part(minpoly), iso, iso));
}

Rectangle NumberField::generator_box(const Rational& target, const Config& cfg) const {
  Rectangle start;
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    start = best_;
  }
  if (start.size() <= target || start.is_point()) return start;
  Rectangle out = refine_root_box(minpoly_, start, target, cfg);
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (out.size() < best_.size()) best_ = out;
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->is_rational() && b->is_rational()) return true;
  return a->minpoly() == b->minpoly() && a->box() == b->box();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field) : field_(std::move(field)) {
  coords_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  const auto n = static_cast<std::size_t>(field_->degree());
  if (coords_.size() > n) coords_ = reduce(coords_, field_->monic_minpoly());
  coords_.resize(n, Rational(0));
}

FieldElement FieldElement::rational(FieldPtr field, const Rational& q) {
  FieldElement out(std::move(field));
  out.coords_[0] = q;
  return out;
}

FieldElement FieldElement::generator(FieldPtr field) {
  if (field->is_rational()) return rational(field, 0);
  FieldElement out(std::move(field));
  out.coords_[1] = 1;
  return out;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  if (is_rational()) return rational(field_, 1 / coords_[0]);
  ExtGcd eg = ext_gcd(as_qpoly(coords_), field_->monic_minpoly());
  if (degree(eg.g) != 0) throw Error(ErrorCode::InvariantViolation, "field generator polynomial is not irreducible");
  return FieldElement(field_, reduce(scale(eg.s, 1 / eg.g[0]), field_->monic_minpoly()));
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = rational(field_, 1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement operator+(const FieldElement& a_in, const FieldElement& b_in) {
  auto [a, b] = unify(a_in, b_in);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
  return a;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a_in, const FieldElement& b_in) {
  auto [a, b] = unify(a_in, b_in);
  if (b.is_rational()) return a * b.coords_[0];
  if (a.is_rational()) return b * a.coords_[0];
  const std::size_t n = a.coords_.size();
  QPoly prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  return FieldElement(a.field_, reduce(std::move(prod), a.field_->monic_minpoly()));
}

FieldElement operator*(const FieldElement& a, const Rational& q) {
  FieldElement out = a;
  for (auto& c : out.coords_) c *= q;
  return out;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a_in, const FieldElement& b_in) {
  if (!same_field(a_in.field(), b_in.field()) && !a_in.field()->is_rational() && !b_in.field()->is_rational()) {
    return false;
  }
  auto [a, b] = unify(a_in, b_in);
  return a.coords_ == b.coords_;
}

int compare(const FieldElement& a, const FieldElement& b) {
  require_same(a.field(), b.field());
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const int c = cmp(a.coords()[i], b.coords()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

FieldPoly::FieldPoly(FieldPtr field, std::vector<FieldElement> coeffs) : field_(std::move(field)) {
  coeffs_.reserve(coeffs.size());
  for (auto& c : coeffs) {
    FieldElement lifted(field_);
    if (!promote(c, field_, lifted)) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
    coeffs_.push_back(std::move(lifted));
  }
  trim();
}

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldPoly FieldPoly::constant(const FieldElement& c) { return FieldPoly(c.field(), {c}); }

FieldPoly FieldPoly::x(FieldPtr field) {
  return FieldPoly(field, {FieldElement(field), FieldElement::rational(field, 1)});
}

FieldPoly FieldPoly::from_qpoly(FieldPtr field, const QPoly& p) {
  std::vector<FieldElement> c;
  for (const auto& v : p) c.push_back(FieldElement::rational(field, v));
  return FieldPoly(field, std::move(c));
}

FieldPoly FieldPoly::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> cs(static_cast<std::size_t>(degree), FieldElement(c.field()));
  cs.push_back(c);
  return FieldPoly(c.field(), std::move(cs));
}

FieldElement FieldPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElement(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldPoly FieldPoly::operator-() const {
  FieldPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (same_field(a, b)) return a;
  if (a->is_rational()) return b;
  if (b->is_rational()) return a;
  throw Error(ErrorCode::FieldMismatch, "polynomials over different number fields");
}

}  // namespace

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  FieldPtr f = common_field(a.field_, b.field_);
  std::vector<FieldElement> out;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  return FieldPoly(f, std::move(out));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) { return a + (-b); }

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  FieldPtr f = common_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return FieldPoly(f);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement(f));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return FieldPoly(f, std::move(out));
}

FieldPoly operator*(const FieldPoly& a, const FieldElement& c) {
  FieldPtr f = common_field(a.field_, c.field());
  std::vector<FieldElement> out;
  for (const auto& v : a.coeffs_) out.push_back(v * c);
  return FieldPoly(f, std::move(out));
}

bool operator==(const FieldPoly& a, const FieldPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  }
  return true;
}

FieldElement FieldPoly::eval(const FieldElement& at) const {
  FieldElement acc = FieldElement::rational(common_field(field_, at.field()), 0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

FieldPoly FieldPoly::derivative() const {
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return FieldPoly(field_, std::move(out));
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

FieldPoly FieldPoly::compose(const FieldPoly& g) const {
  FieldPoly acc(common_field(field_, g.field_));
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * g + constant(coeffs_[i]);
  return acc;
}

bool FieldPoly::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_rational(); });
}

QPoly FieldPoly::to_qpoly() const {
  QPoly out;
  for (const auto& c : coeffs_) out.push_back(c.rational_part());
  return out;
}

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  FieldPtr f = common_field(a.field(), b.field());
  std::vector<FieldElement> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {FieldPoly(f), a};
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - db + 1), FieldElement(f));
  const FieldElement inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const FieldElement c = r[static_cast<std::size_t>(i)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = slot - c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db), FieldElement(f));
  return {FieldPoly(f, std::move(q)), FieldPoly(f, std::move(r))};
}

FieldPoly gcd(const FieldPoly& a_in, const FieldPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd of two zero polynomials");
  FieldPoly a = a_in, b = b_in;
  while (!b.is_zero()) {
    FieldPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<FieldPoly> squarefree_decomposition(const FieldPoly& f_in) {
  if (f_in.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<FieldPoly> parts;
  FieldPoly f = f_in.monic();
  if (f.degree() == 0) return parts;
  FieldPoly a = gcd(f, f.derivative());
  FieldPoly b = divmod(f, a).first;
  FieldPoly c = divmod(f.derivative(), a).first;
  FieldPoly d = c - b.derivative();
  while (b.degree() > 0) {
    FieldPoly g = gcd(b, d);
    parts.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

IntPoly norm(const FieldPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "norm of zero polynomial");
  const FieldPtr& k = f.field();
  if (k->is_rational()) return primitive_part(f.to_qpoly());
  const int n = k->degree();
  const int dx = f.degree() * n;
  // F(x0, t) for sample points x0, then Res_t(m(t), F(x0, t)).
  std::vector<Rational> xs, ys;
  for (int s = 0; s <= dx; ++s) {
    const Rational x0 = s;
    QPoly acc;
    Rational xp = 1;
    for (const auto& c : f.coeffs()) {
      acc = add(acc, scale(as_qpoly(c.coords()), xp));
      xp *= x0;
    }
    trim(acc);
    xs.push_back(x0);
    ys.push_back(resultant(k->monic_minpoly(), acc));
  }
  return primitive_part(interpolate(xs, ys));
}

// ---------------------------------------------------------------------------

Embedding Embedding::identity(const FieldPtr& field) {
  Embedding e(field, field, FieldElement::generator(field));
  e.identity_ = true;
  return e;
}

Embedding::Embedding(FieldPtr from, FieldPtr to, const FieldElement& generator_image)
    : from_(std::move(from)), to_(std::move(to)) {
  FieldElement img(to_);
  if (!promote(generator_image, to_, img)) throw Error(ErrorCode::FieldMismatch, "embedding image in wrong field");
  FieldElement p = FieldElement::rational(to_, 1);
  for (int i = 0; i < from_->degree(); ++i) {
    powers_.push_back(p);
    p = p * img;
  }
  identity_ = same_field(from_, to_) && (from_->is_rational() || img == FieldElement::generator(to_));
}

FieldElement Embedding::apply(const FieldElement& a) const {
  if (identity_ && same_field(a.field(), to_)) return a;
  FieldElement src(from_);
  if (!promote(a, from_, src)) throw Error(ErrorCode::FieldMismatch, "element is not in the embedding's source field");
  FieldElement out(to_);
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (sgn(src.coords()[i]) != 0) out = out + powers_[i] * src.coords()[i];
  }
  return out;
}

FieldPoly Embedding::apply(const FieldPoly& p) const {
  std::vector<FieldElement> out;
  for (const auto& c : p.coeffs()) out.push_back(apply(c));
  return FieldPoly(to_, std::move(out));
}

Embedding Embedding::then(const Embedding& next) const {
  if (identity_) return next;
  if (next.identity_) return *this;
  return Embedding(from_, next.to_, next.apply(powers_.size() > 1 ? powers_[1] : FieldElement(to_)));
}

// ---------------------------------------------------------------------------

namespace {

Rectangle scale_rect(const Rectangle& r, const Rational& k) {
  if (sgn(k) >= 0) return {r.re_lo * k, r.re_hi * k, r.im_lo * k, r.im_hi * k};
  return {r.re_hi * k, r.re_lo * k, r.im_hi * k, r.im_lo * k};
}

Rectangle add_rect(const Rectangle& a, const Rectangle& b) {
  return {a.re_lo + b.re_lo, a.re_hi + b.re_hi, a.im_lo + b.im_lo, a.im_hi + b.im_hi};
}

// Res_t(g(t), f(s - k t)) as a polynomial in s.
QPoly shifted_resultant(const QPoly& f, const QPoly& g, const Rational& k) {
  const int d = degree(f) * degree(g);
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= d; ++i) {
    const Rational s0 = i;
    xs.push_back(s0);
    ys.push_back(resultant(g, compose_linear(f, s0, -k)));
  }
  return interpolate(xs, ys);
}

struct Located {
  IntPoly poly;
  Rectangle box;
};

// Among the roots of the square-free polynomial `r`, the one equal to
// theta + k alpha.
Located locate_sum(const FieldPtr& k_field, const FieldPtr& a_field, const Rational& k, const IntPoly& r,
                   const Config& cfg) {
  std::vector<Located> cands;
  for (const auto& p : irreducible_factors(r, cfg)) {
    for (const auto& b : isolate_complex_roots(p, cfg)) cands.push_back({p, b});
  }
  Rational target = 1;
  for (int round = 0;; ++round) {
    const Rectangle g = add_rect(k_field->generator_box(target, cfg), scale_rect(a_field->generator_box(target, cfg), k));
    std::vector<Located> hit;
    for (auto& c : cands) {
      if (intersects(c.box, g)) hit.push_back(c);
    }
    if (hit.size() == 1) return hit[0];
    if (hit.empty()) throw Error(ErrorCode::InvariantViolation, "primitive element lost during extension");
    target /= 4;
    for (auto& c : hit) c.box = refine_root_box(c.poly, c.box, target, cfg);
    cands = std::move(hit);
    if (round > cfg.precision_cap_bits) throw Error(ErrorCode::PrecisionCapExceeded, "could not separate conjugates");
  }
}

}  // namespace

Extension nf_extend(const FieldPtr& field, const IntPoly& minpoly, const Rectangle& box, const Config& cfg) {
  return nf_extend(field, NumberField::create(minpoly, box, cfg), cfg);
}

Extension nf_extend(const FieldPtr& field, const FieldPtr& alpha_field, const Config& cfg) {
  if (alpha_field->is_rational()) {
    IntPoly f = primitive_part(alpha_field->minpoly());
    Rational r(-f[0], f[1]);
    r.canonicalize();
    return {field, Embedding::identity(field), FieldElement::rational(field, r)};
  }
  if (field->is_rational()) {
    return {alpha_field, Embedding(field, alpha_field, FieldElement(alpha_field)),
            FieldElement::generator(alpha_field)};
  }
  if (same_field(field, alpha_field)) {
    return {field, Embedding::identity(field), FieldElement::generator(field)};
  }
  const QPoly f = field->monic_minpoly();
  const QPoly g = alpha_field->monic_minpoly();
  const int n = degree(f);
  if (n * degree(g) > cfg.factor_degree_cap) {
    throw Error(ErrorCode::ExtensionFailed, "composite field degree exceeds the factoring cap");
  }
  for (int i = 1; i <= 2 * cfg.primitive_search_bound; ++i) {
    const Rational k = (i % 2 == 1) ? Rational((i + 1) / 2) : Rational(-(i / 2));
    QPoly rq = shifted_resultant(f, g, k);
    IntPoly r = primitive_part(rq);
    if (degree(squarefree_part(r)) != degree(r)) continue;
    Located gamma = locate_sum(field, alpha_field, k, r, cfg);
    FieldPtr big = NumberField::create_trusted(gamma.poly, gamma.box);
    // alpha is the unique common root of g(t) and f(gamma - k t) over big.
    const FieldElement gen = FieldElement::generator(big);
    FieldPoly gt = FieldPoly::from_qpoly(big, g);
    FieldPoly lin(big, {gen, FieldElement::rational(big, -k)});
    FieldPoly ft = FieldPoly::from_qpoly(big, f).compose(lin);
    FieldPoly h = gcd(gt, ft);
    if (h.degree() != 1) throw Error(ErrorCode::InvariantViolation, "primitive element gcd is not linear");
    const FieldElement alpha = -h.coeff(0);
    const FieldElement theta = gen - alpha * k;
    if (big->degree() == n) {
      // alpha already lies in field: solve for its coordinates in powers of theta.
      QMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      FieldElement p = FieldElement::rational(big, 1);
      for (int j = 0; j < n; ++j) {
        for (int row = 0; row < n; ++row) a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = p.coords()[static_cast<std::size_t>(row)];
        p = p * theta;
      }
      auto sol = solve(a, alpha.coords());
      if (!sol) throw Error(ErrorCode::InvariantViolation, "singular basis change in extension");
      return {field, Embedding::identity(field), FieldElement(field, *sol)};
    }
    return {big, Embedding(field, big, theta), alpha};
  }
  throw Error(ErrorCode::ExtensionFailed, "no primitive element theta + k*alpha with |k| <= " +
                                              std::to_string(cfg.primitive_search_bound));
}

std::string to_string(const FieldElement& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const Rational& c = a.coords()[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    const Rational m = abs(c);
    if (i == 0) {
      os << m.get_str();
    } else {
      if (m != 1) os << m.get_str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace expzero::nf
