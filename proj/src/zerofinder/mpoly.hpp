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

#ifndef EXPZERO_ZEROFINDER_MPOLY_HPP
#define EXPZERO_ZEROFINDER_MPOLY_HPP

#include <map>
#include <vector>

#include "numberfield/field.hpp"

namespace expzero::zf {

using Monomial = std::vector<int>;

// Sparse multivariate polynomial over a number field, terms keyed by
// exponent vectors in lexicographic order.
class MPoly {
 public:
  MPoly(nf::FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

  static MPoly constant(const nf::FieldElement& c, int nvars);

  const nf::FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::map<Monomial, nf::FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree_in(int v) const;
  int total_degree() const;

  void add_term(const Monomial& m, const nf::FieldElement& c);

  // Sum of the terms with x_v^d, with x_v removed.
  MPoly coeff_in(int v, int d) const;
  MPoly times_var(int v, int d) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const nf::FieldElement& c);
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  nf::FieldPtr field_;
  int nvars_;
  std::map<Monomial, nf::FieldElement> terms_;
};

// Exact quotient; throws InvariantViolation when b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);

// Greatest common divisor with leading coefficient 1 (primitive PRS,
// recursive in the variables).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace expzero::zf

#endif  // EXPZERO_ZEROFINDER_MPOLY_HPP
