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

#ifndef EXPZERO_EXPCORE_EXPPOLY_HPP
#define EXPZERO_EXPCORE_EXPPOLY_HPP

#include <memory>
#include <vector>

#include "numberfield/field.hpp"

namespace expzero::ec {

using nf::Embedding;
using nf::FieldElement;
using nf::FieldPoly;
using nf::FieldPtr;
using nf::Rational;

// Normal form p = a_0(x) + sum a_i(x) exp(g_i) with nonzero coefficients,
// pairwise distinct nonzero exponents, terms sorted by `compare` on their
// exponents. Structural equality of normal forms is ring equality.
class ExpPoly {
 public:
  struct Term {
    FieldPoly coeff;
    std::shared_ptr<const ExpPoly> exponent;
  };

  ExpPoly();  // zero over Q
  explicit ExpPoly(FieldPtr field);
  explicit ExpPoly(FieldPoly poly);

  static ExpPoly constant(const FieldElement& c);
  static ExpPoly rational(const FieldPtr& field, const Rational& q);
  static ExpPoly x(const FieldPtr& field);
  // coeff * exp(exponent), normalized (exp(0) = 1).
  static ExpPoly term(const FieldPoly& coeff, const ExpPoly& exponent);

  const FieldPtr& field() const { return field_; }
  const FieldPoly& poly_part() const { return poly_; }
  const std::vector<Term>& terms() const { return terms_; }
  int height() const { return height_; }
  bool is_zero() const { return poly_.is_zero() && terms_.empty(); }
  // No occurrence of x anywhere in the tree.
  bool is_constant() const { return constant_; }
  bool is_one() const { return terms_.empty() && poly_.is_one(); }
  // Polynomial part of degree <= 0 and no terms.
  bool is_field_constant() const { return terms_.empty() && poly_.degree() <= 0; }

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const FieldElement& c);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b);

 private:
  friend class Builder;
  void finish();

  FieldPtr field_;
  FieldPoly poly_;
  std::vector<Term> terms_;
  int height_ = 0;
  bool constant_ = true;
};

ExpPoly ep_exp(const ExpPoly& p);
ExpPoly pow(const ExpPoly& p, unsigned e);

// Canonical total order: height, number of terms, degree of the polynomial
// part, polynomial part coordinates, then the terms in order (exponent
// first, coefficient second).
int compare(const ExpPoly& a, const ExpPoly& b);
int compare(const FieldPoly& a, const FieldPoly& b);

struct CanonicalLess {
  bool operator()(const ExpPoly& a, const ExpPoly& b) const { return compare(a, b) < 0; }
};

// Throws NotConstant unless p.is_constant().
int depth(const ExpPoly& c);

// p with x := beta; a constant.
ExpPoly eval_at(const ExpPoly& p, const FieldElement& beta);

// Rewrites every coefficient through the embedding.
ExpPoly map_field(const ExpPoly& p, const Embedding& e);

// Lifts a and b into a shared field (Q lifts into anything).
FieldPtr common_field(const ExpPoly& a, const ExpPoly& b);
ExpPoly lift(const ExpPoly& p, const FieldPtr& field);

}  // namespace expzero::ec

#endif  // EXPZERO_EXPCORE_EXPPOLY_HPP
