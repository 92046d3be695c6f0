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

#include "frontend/printer.hpp"

#include <sstream>
#include <vector>

namespace expzero::fe {
namespace {

using nf::FieldElement;
using nf::Rational;

struct Item {
  bool negative = false;
  std::string body;
};

std::string power(const std::string& base, int k) {
  return k == 1 ? base : base + "^" + std::to_string(k);
}

// |c| * f1 * f2 ..., written "num*f1*f2/den".
std::string monomial(const Rational& c, const std::vector<std::string>& factors) {
  const Rational m = abs(c);
  std::string out;
  if (factors.empty()) return m.get_str();
  if (m.get_num() != 1) out = m.get_num().get_str() + "*";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  if (m.get_den() != 1) out += "/" + m.get_den().get_str();
  return out;
}

std::string join(const std::vector<Item>& items) {
  if (items.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0) {
      if (items[i].negative) out += "-";
    } else {
      out += items[i].negative ? " - " : " + ";
    }
    out += items[i].body;
  }
  return out;
}

// Index of the only nonzero coordinate, or -1.
int single_coordinate(const FieldElement& a) {
  int idx = -1;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (sgn(a.coords()[i]) == 0) continue;
    if (idx >= 0) return -1;
    idx = static_cast<int>(i);
  }
  return idx;
}

// Item for a * (trailing factors), a a field element.
Item scaled(const FieldElement& a, std::vector<std::string> trailing) {
  const int idx = single_coordinate(a);
  if (idx >= 0) {
    std::vector<std::string> factors;
    if (idx > 0) factors.push_back(power(generator_literal(a.field()), idx));
    factors.insert(factors.end(), trailing.begin(), trailing.end());
    return {sgn(a.coords()[static_cast<std::size_t>(idx)]) < 0, monomial(a.coords()[static_cast<std::size_t>(idx)], factors)};
  }
  std::string body = "(" + print(a) + ")";
  for (const auto& f : trailing) body += "*" + f;
  return {false, body};
}

std::vector<Item> poly_items(const nf::FieldPoly& p) {
  std::vector<Item> items;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    std::vector<std::string> tr;
    if (k > 0) tr.push_back(power("x", static_cast<int>(k)));
    items.push_back(scaled(p.coeffs()[k], tr));
  }
  return items;
}

}  // namespace

std::string decimal(const Rational& q, int digits) {
  mpf_class v(q, static_cast<mp_bitcnt_t>(digits * 4 + 64));
  mp_exp_t e;
  std::string s = v.get_str(e, 10, static_cast<std::size_t>(digits));
  if (s.empty() || s == "0") return "0";
  std::string sign;
  if (s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  if (e <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-e), '0') + s;
  if (static_cast<std::size_t>(e) >= s.size()) return sign + s + std::string(static_cast<std::size_t>(e) - s.size(), '0');
  return sign + s.substr(0, static_cast<std::size_t>(e)) + "." + s.substr(static_cast<std::size_t>(e));
}

std::string generator_literal(const nf::FieldPtr& field) {
  const auto& b = field->box();
  return "alg(" + nf::to_string(field->minpoly()) + ", " + b.re_lo.get_str() + ", " + b.re_hi.get_str() + ", " +
         b.im_lo.get_str() + ", " + b.im_hi.get_str() + ")";
}

std::string print(const FieldElement& a) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const Rational& c = a.coords()[i];
    if (sgn(c) == 0) continue;
    std::vector<std::string> f;
    if (i > 0) f.push_back(power(generator_literal(a.field()), static_cast<int>(i)));
    items.push_back({sgn(c) < 0, monomial(c, f)});
  }
  return join(items);
}

std::string print(const nf::FieldPoly& p) { return join(poly_items(p)); }

std::string print(const ec::ExpPoly& p) {
  std::vector<Item> items = poly_items(p.poly_part());
  for (const auto& t : p.terms()) {
    const std::string e = "exp(" + print(*t.exponent) + ")";
    const auto& c = t.coeff;
    int nonzero = 0, deg = 0;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      if (!c.coeffs()[k].is_zero()) {
        ++nonzero;
        deg = static_cast<int>(k);
      }
    }
    if (nonzero == 1) {
      std::vector<std::string> tr;
      if (deg > 0) tr.push_back(power("x", deg));
      tr.push_back(e);
      items.push_back(scaled(c.coeffs()[static_cast<std::size_t>(deg)], tr));
    } else {
      items.push_back({false, "(" + print(c) + ")*" + e});
    }
  }
  return join(items);
}

std::string print(const nf::AlgebraicRoot& r) {
  if (r.is_rational()) return r.rational_value().get_str();
  const auto& b = r.box;
  return "alg(" + nf::to_string(r.minpoly) + ", " + b.re_lo.get_str() + ", " + b.re_hi.get_str() + ", " +
         b.im_lo.get_str() + ", " + b.im_hi.get_str() + ")";
}

std::string approx(const nf::AlgebraicRoot& r, int digits) {
  const auto fine = nf::refine(r, nf::pow2(-(4 * digits + 16)));
  const nf::CQ c = fine.box.center();
  std::string out = decimal(c.re, digits);
  if (sgn(c.im) != 0) out += (sgn(c.im) < 0 ? " - " : " + ") + decimal(abs(c.im), digits) + "i";
  return out;
}

}  // namespace expzero::fe
