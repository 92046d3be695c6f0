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

#include "expcore/exppoly.hpp"

#include <algorithm>
#include <map>

#include "util/error.hpp"

namespace expzero::ec {

using ExpPtr = std::shared_ptr<const ExpPoly>;

namespace {

struct PtrLess {
  bool operator()(const ExpPtr& a, const ExpPtr& b) const { return compare(*a, *b) < 0; }
};

}  // namespace

// Accumulates a_0 + sum c_i exp(g_i) and emits the normal form.
class Builder {
 public:
  explicit Builder(FieldPtr field) : field_(field), poly_(field) {}

  void add_poly(const FieldPoly& p) { poly_ = poly_ + FieldPoly(field_, p.coeffs()); }

  void add_term(const FieldPoly& c_in, const ExpPtr& g) {
    if (c_in.is_zero()) return;
    const FieldPoly c(field_, c_in.coeffs());
    if (g->is_zero()) {
      add_poly(c);
      return;
    }
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, c);
    } else {
      it->second = it->second + c;
    }
  }

  ExpPoly build() {
    ExpPoly out(field_);
    out.poly_ = std::move(poly_);
    for (auto& [g, c] : terms_) {
      if (!c.is_zero()) out.terms_.push_back({std::move(c), g});
    }
    out.finish();
    return out;
  }

 private:
  FieldPtr field_;
  FieldPoly poly_;
  std::map<ExpPtr, FieldPoly, PtrLess> terms_;
};

ExpPoly::ExpPoly() : ExpPoly(nf::NumberField::rationals()) {}

ExpPoly::ExpPoly(FieldPtr field) : field_(field), poly_(field) {}

ExpPoly::ExpPoly(FieldPoly poly) : field_(poly.field()), poly_(std::move(poly)) { finish(); }


void ExpPoly::finish() {
  height_ = 0;
  constant_ = poly_.degree() <= 0;
  for (const auto& t : terms_) {
    height_ = std::max(height_, t.exponent->height() + 1);
    constant_ = constant_ && t.coeff.degree() <= 0 && t.exponent->is_constant();
  }
}

ExpPoly ExpPoly::constant(const FieldElement& c) { return ExpPoly(FieldPoly::constant(c)); }

ExpPoly ExpPoly::rational(const FieldPtr& field, const Rational& q) {
  return constant(FieldElement::rational(field, q));
}

ExpPoly ExpPoly::x(const FieldPtr& field) { return ExpPoly(FieldPoly::x(field)); }

ExpPoly ExpPoly::term(const FieldPoly& coeff, const ExpPoly& exponent) {
  const FieldPtr f = nf::same_field(coeff.field(), exponent.field()) || coeff.field()->is_rational()
                         ? exponent.field()
                         : coeff.field();
  Builder b(f);
  b.add_term(coeff, std::make_shared<const ExpPoly>(lift(exponent, f)));
  return b.build();
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  out.poly_ = -out.poly_;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ExpPoly operator+(const ExpPoly& a_in, const ExpPoly& b_in) {
  const FieldPtr f = common_field(a_in, b_in);
  const ExpPoly a = lift(a_in, f), b = lift(b_in, f);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ExpPoly out(f);
  out.poly_ = a.poly_ + b.poly_;
  // Merge of two sorted term lists.
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) {
      c = 1;
    } else if (j == b.terms_.size()) {
      c = -1;
    } else {
      c = compare(*a.terms_[i].exponent, *b.terms_[j].exponent);
    }
    if (c < 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c > 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      FieldPoly s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({std::move(s), a.terms_[i].exponent});
      ++i;
      ++j;
    }
  }
  out.finish();
  return out;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a_in, const ExpPoly& b_in) {
  const FieldPtr f = common_field(a_in, b_in);
  const ExpPoly a = lift(a_in, f), b = lift(b_in, f);
  if (a.is_zero() || b.is_zero()) return ExpPoly(f);
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Builder out(f);
  out.add_poly(a.poly_ * b.poly_);
  if (!a.poly_.is_zero()) {
    for (const auto& t : b.terms_) out.add_term(a.poly_ * t.coeff, t.exponent);
  }
  if (!b.poly_.is_zero()) {
    for (const auto& t : a.terms_) out.add_term(t.coeff * b.poly_, t.exponent);
  }
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.add_term(s.coeff * t.coeff, std::make_shared<const ExpPoly>(*s.exponent + *t.exponent));
    }
  }
  return out.build();
}

ExpPoly operator*(const ExpPoly& a, const FieldElement& c) {
  if (c.is_zero()) return ExpPoly(a.field());
  return a * ExpPoly::constant(c);
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  if (a.height_ != b.height_ || a.terms_.size() != b.terms_.size()) return false;
  if (!(a.poly_ == b.poly_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    if (!(*a.terms_[i].exponent == *b.terms_[i].exponent)) return false;
  }
  return true;
}

ExpPoly ep_exp(const ExpPoly& p) { return ExpPoly::term(FieldPoly::constant(FieldElement::rational(p.field(), 1)), p); }

ExpPoly pow(const ExpPoly& p, unsigned e) {
  ExpPoly result = ExpPoly::rational(p.field(), 1), base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

int compare(const FieldPoly& a, const FieldPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const auto& x = a.coeffs()[i];
    const auto& y = b.coeffs()[i];
    if (!nf::same_field(x.field(), y.field())) {
      const int c = nf::compare(x.is_rational() && !y.is_rational() ? FieldElement::rational(y.field(), x.rational_part()) : x,
                                y.is_rational() && !x.is_rational() ? FieldElement::rational(x.field(), y.rational_part()) : y);
      if (c != 0) return c;
      continue;
    }
    const int c = nf::compare(x, y);
    if (c != 0) return c;
  }
  return 0;
}

int compare(const ExpPoly& a, const ExpPoly& b) {
  if (&a == &b) return 0;
  if (a.height() != b.height()) return a.height() < b.height() ? -1 : 1;
  if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size() ? -1 : 1;
  if (const int c = compare(a.poly_part(), b.poly_part()); c != 0) return c;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    if (const int c = compare(*a.terms()[i].exponent, *b.terms()[i].exponent); c != 0) return c;
    if (const int c = compare(a.terms()[i].coeff, b.terms()[i].coeff); c != 0) return c;
  }
  return 0;
}

int depth(const ExpPoly& c) {
  if (!c.is_constant()) throw Error(ErrorCode::NotConstant, "depth is defined for constants only");
  return c.height();
}

ExpPoly eval_at(const ExpPoly& p, const FieldElement& beta) {
  const FieldPtr f = nf::same_field(p.field(), beta.field()) || p.field()->is_rational() ? beta.field() : p.field();
  ExpPoly out = ExpPoly::constant(p.poly_part().eval(beta));
  for (const auto& t : p.terms()) {
    const ExpPoly g = eval_at(*t.exponent, beta);
    out = out + ExpPoly::term(FieldPoly::constant(t.coeff.eval(beta)), g);
  }
  return lift(out, f);
}

ExpPoly map_field(const ExpPoly& p, const Embedding& e) {
  if (e.is_identity() && nf::same_field(p.field(), e.to())) return p;
  Builder b(e.to());
  b.add_poly(e.apply(p.poly_part()));
  for (const auto& t : p.terms()) {
    b.add_term(e.apply(t.coeff), std::make_shared<const ExpPoly>(map_field(*t.exponent, e)));
  }
  return b.build();
}

FieldPtr common_field(const ExpPoly& a, const ExpPoly& b) {
  if (nf::same_field(a.field(), b.field())) return a.field();
  if (a.field()->is_rational()) return b.field();
  if (b.field()->is_rational()) return a.field();
  throw Error(ErrorCode::FieldMismatch, "exponential polynomials over different number fields");
}

ExpPoly lift(const ExpPoly& p, const FieldPtr& field) {
  if (nf::same_field(p.field(), field)) return p;
  if (!p.field()->is_rational()) throw Error(ErrorCode::FieldMismatch, "cannot lift into an unrelated field");
  return map_field(p, Embedding(p.field(), field, FieldElement(field)));
}

}  // namespace expzero::ec
