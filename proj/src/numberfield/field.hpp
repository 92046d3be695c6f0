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

#ifndef EXPZERO_NUMBERFIELD_FIELD_HPP
#define EXPZERO_NUMBERFIELD_FIELD_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "numberfield/qpoly.hpp"
#include "numberfield/rect.hpp"
#include "util/config.hpp"

namespace expzero::nf {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q(theta) for a fixed complex root theta of an irreducible integer
// polynomial. Immutable; shared between all elements that live in it.
class NumberField {
 public:
  // The field Q, generated by the root 0 of t.
  static FieldPtr rationals();

  // Validates minpoly (square-free, irreducible, degree within the cap) and
  // certifies that `box` holds exactly one of its roots. A degree-1 minpoly
  // yields rationals().
  static FieldPtr create(const IntPoly& minpoly, const Rectangle& box,
                         const Config& cfg = default_config());

  // Skips validation; `iso` must be an isolating rectangle of an irreducible
  // minpoly produced by this library's root isolation.
  static FieldPtr create_trusted(const IntPoly& minpoly, const Rectangle& iso);

  const IntPoly& minpoly() const { return minpoly_; }
  const QPoly& monic_minpoly() const { return monic_; }
  // The box the field was declared with; part of the field's identity.
  const Rectangle& box() const { return box_; }
  // Isolating rectangle with the generator in its interior.
  const Rectangle& isolating_box() const { return iso_; }
  int degree() const { return degree(minpoly_); }
  bool is_rational() const { return degree() == 1; }

  // Generator enclosure no larger than `target`.
  Rectangle generator_box(const Rational& target, const Config& cfg = default_config()) const;

 private:
  NumberField(IntPoly minpoly, Rectangle box, Rectangle iso);
  static int degree(const IntPoly& p) { return nf::degree(p); }

  IntPoly minpoly_;
  QPoly monic_;
  Rectangle box_;
  Rectangle iso_;
  // Tightest generator enclosure computed so far; only ever shrinks.
  mutable std::mutex cache_mu_;
  mutable Rectangle best_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

class FieldElement {
 public:
  explicit FieldElement(FieldPtr field);  // zero
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement rational(FieldPtr field, const Rational& q);
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Rational value; only meaningful when is_rational().
  const Rational& rational_part() const { return coords_[0]; }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& q);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

// Lexicographic on coordinates; a total order within one field.
int compare(const FieldElement& a, const FieldElement& b);

// Dense polynomial over a number field, lowest degree first, no trailing
// zero coefficients.
class FieldPoly {
 public:
  explicit FieldPoly(FieldPtr field) : field_(std::move(field)) {}
  FieldPoly(FieldPtr field, std::vector<FieldElement> coeffs);

  static FieldPoly constant(const FieldElement& c);
  static FieldPoly x(FieldPtr field);
  static FieldPoly from_qpoly(FieldPtr field, const QPoly& p);
  static FieldPoly monomial(const FieldElement& c, int degree);

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  // Coefficient of x^i (zero beyond the degree).
  FieldElement coeff(int i) const;
  const FieldElement& leading() const { return coeffs_.back(); }

  FieldPoly operator-() const;
  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldElement& c);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b);

  FieldElement eval(const FieldElement& at) const;
  FieldPoly derivative() const;
  FieldPoly monic() const;
  // Composition f(g).
  FieldPoly compose(const FieldPoly& g) const;
  bool is_rational() const;  // all coefficients rational
  QPoly to_qpoly() const;    // requires is_rational()

 private:
  void trim();
  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
// Monic gcd; gcd(0, 0) is rejected with ZeroPolynomial.
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);
// Yun's algorithm: parts[i] is square-free with multiplicity i + 1.
std::vector<FieldPoly> squarefree_decomposition(const FieldPoly& f);
// Norm over Q: an integer polynomial vanishing at every root of f (and of
// its conjugates), computed as a resultant eliminating the generator.
IntPoly norm(const FieldPoly& f);

// Field homomorphism determined by the image of the source generator.
class Embedding {
 public:
  static Embedding identity(const FieldPtr& field);
  Embedding(FieldPtr from, FieldPtr to, const FieldElement& generator_image);

  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }
  bool is_identity() const { return identity_; }
  FieldElement apply(const FieldElement& a) const;
  FieldPoly apply(const FieldPoly& p) const;
  // this followed by next.
  Embedding then(const Embedding& next) const;

 private:
  FieldPtr from_, to_;
  std::vector<FieldElement> powers_;  // generator_image^i, i < deg(from)
  bool identity_ = false;
};

struct Extension {
  FieldPtr field;
  Embedding embedding;   // old field -> field
  FieldElement adjoined;  // the new generator's value in field
};

// Primitive element composition: a field containing `field` and the root of
// `minpoly` isolated by `box`. Validates the new generator as create() does.
Extension nf_extend(const FieldPtr& field, const IntPoly& minpoly, const Rectangle& box,
                    const Config& cfg = default_config());
// Adjoins the generator of alpha_field.
Extension nf_extend(const FieldPtr& field, const FieldPtr& alpha_field, const Config& cfg = default_config());

std::string to_string(const FieldElement& a);

}  // namespace expzero::nf

#endif  // EXPZERO_NUMBERFIELD_FIELD_HPP
