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

#include "zerofinder/mpoly.hpp"

#include <algorithm>

#include "util/error.hpp"

namespace expzero::zf {

using nf::FieldElement;

MPoly MPoly::constant(const FieldElement& c, int nvars) {
  MPoly out(c.field(), nvars);
  out.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return out;
}

bool MPoly::is_constant() const {
  for (const auto& [m, _] : terms_) {
    if (std::any_of(m.begin(), m.end(), [](int e) { return e != 0; })) return false;
  }
  return true;
}

int MPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m[static_cast<std::size_t>(v)]);
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, _] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, FieldElement(field_) + c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::coeff_in(int v, int d) const {
  MPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<std::size_t>(v)] != d) continue;
    Monomial k = m;
    k[static_cast<std::size_t>(v)] = 0;
    out.add_term(k, c);
  }
  return out;
}

MPoly MPoly::times_var(int v, int d) const {
  MPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    k[static_cast<std::size_t>(v)] += d;
    out.terms_.emplace(std::move(k), c);
  }
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MPoly operator*(const MPoly& a, const FieldElement& c) {
  MPoly out(a.field_, a.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : a.terms_) out.terms_.emplace(m, v * c);
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

MPoly exact_div(const MPoly& a_in, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "multivariate division by zero");
  MPoly a = a_in, q(a.field(), a.nvars());
  const auto& [lm, lc] = *b.terms().rbegin();
  const FieldElement inv = lc.inverse();
  while (!a.is_zero()) {
    const auto& [am, ac] = *a.terms().rbegin();
    Monomial m(am.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = am[i] - lm[i];
      if (m[i] < 0) throw Error(ErrorCode::InvariantViolation, "inexact multivariate division");
    }
    MPoly t(a.field(), a.nvars());
    t.add_term(m, ac * inv);
    q = q + t;
    a = a - t * b;
  }
  return q;
}

namespace {

MPoly normalize(const MPoly& a) {
  if (a.is_zero()) return a;
  return a * a.terms().rbegin()->second.inverse();
}

int main_var(const MPoly& a, const MPoly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

MPoly content_in(const MPoly& a, int v) {
  MPoly c(a.field(), a.nvars());
  for (int d = a.degree_in(v); d >= 0; --d) {
    c = gcd(c, a.coeff_in(v, d));
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

MPoly primitive_in(const MPoly& a, int v) {
  if (a.is_zero()) return a;
  return exact_div(a, content_in(a, v));
}

// lc(b)^(da - db + 1) a mod b in the variable v.
MPoly prem_in(MPoly a, const MPoly& b, int v) {
  const int db = b.degree_in(v);
  const MPoly lb = b.coeff_in(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const MPoly la = a.coeff_in(v, da);
    a = a * lb - (b * la).times_var(v, da - db);
  }
  return a;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const MPoly one = MPoly::constant(FieldElement::rational(a.field(), 1), a.nvars());
  if (a.is_constant() || b.is_constant()) return one;
  const int v = main_var(a, b);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
  const MPoly ca = content_in(a, v), cb = content_in(b, v);
  const MPoly c = gcd(ca, cb);
  MPoly p = exact_div(a, ca), q = exact_div(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(v) > 0) {
    MPoly r = prem_in(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_in(r, v);
  }
  const MPoly g = q.is_zero() ? primitive_in(p, v) : one;
  return normalize(c * g);
}

}  // namespace expzero::zf
