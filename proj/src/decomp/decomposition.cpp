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

#include "decomp/decomposition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>

#include "numberfield/linalg.hpp"
#include "util/error.hpp"

namespace expzero::dc {
namespace {

using ec::CanonicalLess;
using nf::FieldElement;
using nf::FieldPoly;
using nf::FieldPtr;

// Coordinate of an ExpPoly over Q: (exponent or none for the polynomial
// part, degree in x, power-basis index).
struct Key {
  std::shared_ptr<const ExpPoly> exp;
  int deg;
  int idx;
};

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (static_cast<bool>(a.exp) != static_cast<bool>(b.exp)) return !a.exp;
    if (a.exp) {
      if (const int c = ec::compare(*a.exp, *b.exp); c != 0) return c < 0;
    }
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.idx < b.idx;
  }
};

using Vec = std::map<Key, Rational, KeyLess>;

void add_poly(Vec& v, const std::shared_ptr<const ExpPoly>& e, const FieldPoly& p, int from_deg) {
  for (int k = from_deg; k <= p.degree(); ++k) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(k)].coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sgn(c[i]) != 0) v[Key{e, k, static_cast<int>(i)}] = c[i];
    }
  }
}

bool x_free(const ExpPoly::Term& t) { return t.coeff.degree() <= 0 && t.exponent->is_constant(); }

// Coordinates modulo field constants. With only_x, x-free terms are dropped
// as well.
Vec coords(const ExpPoly& e, bool only_x) {
  Vec v;
  add_poly(v, nullptr, e.poly_part(), 1);
  for (const auto& t : e.terms()) {
    if (only_x && x_free(t)) continue;
    add_poly(v, t.exponent, t.coeff, 0);
  }
  return v;
}

// Solution r of sum r_i basis_i = v, if any.
std::optional<std::vector<Rational>> express(const std::vector<Vec>& basis, const Vec& v) {
  std::map<Key, std::size_t, KeyLess> rows;
  for (const auto& b : basis) {
    for (const auto& [k, _] : b) rows.emplace(k, rows.size());
  }
  for (const auto& [k, _] : v) {
    if (!rows.count(k)) return std::nullopt;
  }
  const std::size_t n = basis.size();
  if (rows.empty()) return std::vector<Rational>(n, Rational(0));
  nf::QMatrix m(rows.size(), std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [k, c] : basis[j]) m[rows.at(k)][j] = c;
  }
  for (const auto& [k, c] : v) m[rows.at(k)][n] = c;
  const auto piv = nf::rref(m);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  std::vector<Rational> r(n, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) r[piv[i]] = m[i][n];
  return r;
}

ExpPoly scaled(const ExpPoly& e, const Rational& q) { return e * FieldElement::rational(e.field(), q); }

struct Split {
  ExpPoly constant;
  std::vector<std::pair<ExpPoly, Rational>> atoms;  // normalized atom, scale
};

std::pair<ExpPoly, Rational> normalize(const ExpPoly& atom) {
  const Vec v = coords(atom, false);
  const Rational s = v.begin()->second;
  return {scaled(atom, 1 / s), s};
}

Split split(const ExpPoly& g) {
  const FieldPtr& k = g.field();
  Split out{ExpPoly(k), {}};
  const FieldPoly& p = g.poly_part();
  for (int d = 0; d <= p.degree(); ++d) {
    const FieldElement& c = p.coeffs()[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (d == 0) {
      out.constant = ExpPoly::constant(c);
      continue;
    }
    FieldElement rest = c;
    if (d == 1 && sgn(c.coords()[0]) != 0) {
      out.atoms.push_back({ExpPoly::x(k), c.coords()[0]});
      rest = c - FieldElement::rational(k, c.coords()[0]);
      if (rest.is_zero()) continue;
    }
    out.atoms.push_back(normalize(ExpPoly(FieldPoly::monomial(rest, d))));
  }
  ExpPoly xdep(k);
  for (const auto& t : g.terms()) {
    const ExpPoly single = ExpPoly::term(t.coeff, *t.exponent);
    if (x_free(t)) {
      out.constant = out.constant + single;
    } else {
      xdep = xdep + single;
    }
  }
  if (!xdep.is_zero()) out.atoms.push_back(normalize(xdep));
  return out;
}

bool is_x(const ExpPoly& e) {
  return e.terms().empty() && e.poly_part().degree() == 1 && e.poly_part().coeffs()[0].is_zero() &&
         e.poly_part().coeffs()[1].is_one();
}

struct Collector {
  std::map<ExpPoly, bool, CanonicalLess> atoms;
  Integer L = 1;

  void exponent(const ExpPoly& g) {
    if (g.is_constant()) return;
    for (const auto& [a, s] : split(g).atoms) {
      if (is_x(a)) L = lcm(L, s.get_den());
      if (atoms.emplace(a, true).second) {
        for (const auto& t : a.terms()) exponent(*t.exponent);
      }
    }
  }

  void source(const ExpPoly& p) {
    for (const auto& t : p.terms()) exponent(*t.exponent);
  }
};

struct Relation {
  std::vector<Rational> r;
  ExpPoly c;
};

Relation relate(const ExpPoly& atom, const std::vector<ExpPoly>& bricks, const std::vector<Vec>& vecs) {
  auto r = express(vecs, coords(atom, false));
  if (!r) throw Error(ErrorCode::InvariantViolation, "atom outside the span of the bricks");
  ExpPoly c = atom;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    if (sgn((*r)[i]) != 0) c = c - scaled(bricks[i], (*r)[i]);
  }
  if (!c.is_field_constant()) throw Error(ErrorCode::InvariantViolation, "brick relation leaves a non-constant");
  return {*r, c};
}

bool exps_less(const PStarTerm& a, const PStarTerm& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  }
  return a.xdeg < b.xdeg;
}

bool same_key(const PStarTerm& a, const PStarTerm& b) { return a.xdeg == b.xdeg && a.exps == b.exps; }

std::vector<PStarTerm> merge(std::vector<PStarTerm> terms) {
  std::sort(terms.begin(), terms.end(), exps_less);
  std::vector<PStarTerm> out;
  for (auto& t : terms) {
    if (!out.empty() && same_key(out.back(), t)) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const PStarTerm& t) { return t.coeff.is_zero(); }), out.end());
  return out;
}

std::vector<PStarTerm> assemble(const ExpPoly& p, const std::vector<ExpPoly>& bricks, const std::vector<Vec>& vecs) {
  const FieldPtr& k = p.field();
  const std::size_t n = bricks.size();
  std::map<ExpPoly, Relation, CanonicalLess> memo;
  auto rel = [&](const ExpPoly& a) -> const Relation& {
    auto it = memo.find(a);
    if (it == memo.end()) it = memo.emplace(a, relate(a, bricks, vecs)).first;
    return it->second;
  };
  std::vector<PStarTerm> out;
  auto emit = [&](const FieldPoly& a, const ExpPoly& c, const std::vector<Rational>& exps) {
    const ExpPoly factor = ec::ep_exp(c);
    for (int d = 0; d <= a.degree(); ++d) {
      const FieldElement& ad = a.coeffs()[static_cast<std::size_t>(d)];
      if (!ad.is_zero()) out.push_back({factor * ad, d, exps});
    }
  };
  emit(p.poly_part(), ExpPoly(k), std::vector<Rational>(n, Rational(0)));
  for (const auto& t : p.terms()) {
    Split s = split(*t.exponent);
    std::vector<Rational> exps(n, Rational(0));
    ExpPoly c = s.constant;
    for (const auto& [a, sc] : s.atoms) {
      const Relation& r = rel(a);
      for (std::size_t i = 0; i < n; ++i) exps[i] += sc * r.r[i];
      c = c + scaled(r.c, sc);
    }
    emit(t.coeff, c, exps);
  }
  return merge(std::move(out));
}

}  // namespace

ExpPoly x_over(const FieldPtr& field, const Integer& L) {
  return ExpPoly(FieldPoly::monomial(FieldElement::rational(field, Rational(Integer(1), L)), 1));
}

std::size_t Decomposition::x_brick() const {
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    const auto& b = bricks[i];
    if (b.terms().empty() && b.poly_part().degree() == 1 && b.poly_part().coeffs()[0].is_zero()) {
      const FieldElement& c = b.poly_part().coeffs()[1];
      if (c.is_rational() && c.rational_part() * L == 1) return i;
    }
  }
  throw Error(ErrorCode::InvariantViolation, "decomposition lacks the brick x/L");
}

std::vector<Decomposition> decompose_shared(const std::vector<ExpPoly>& ps_in) {
  if (ps_in.empty()) return {};
  FieldPtr k = ps_in[0].field();
  for (const auto& p : ps_in) k = ec::common_field(ec::ExpPoly(k), p);
  std::vector<ExpPoly> ps;
  for (const auto& p : ps_in) ps.push_back(ec::lift(p, k));

  Collector col;
  for (const auto& p : ps) col.source(p);
  const ExpPoly xl = x_over(k, col.L);

  // Greedy basis in canonical order, x/L first.
  std::vector<ExpPoly> basis{xl};
  std::vector<Vec> vecs{coords(xl, false)};
  for (const auto& [a, _] : col.atoms) {
    if (is_x(a)) continue;
    Vec v = coords(a, false);
    if (express(vecs, v)) continue;
    basis.push_back(a);
    vecs.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(), CanonicalLess());
  vecs.clear();
  for (const auto& b : basis) vecs.push_back(coords(b, false));

  std::vector<Decomposition> out;
  for (const auto& p : ps) out.push_back({basis, col.L, assemble(p, basis, vecs), p});
  return out;
}

Decomposition decompose(const ExpPoly& p) { return decompose_shared({p}).front(); }

Decomposition refine(const Decomposition& d_in) {
  Decomposition d = d_in;
  while (true) {
    const std::size_t xb = d.x_brick();
    std::vector<Vec> all;
    for (const auto& b : d.bricks) all.push_back(coords(b, false));
    std::optional<std::size_t> victim;
    std::vector<Rational> rel;
    for (std::size_t j = d.bricks.size(); j-- > 0;) {
      if (j == xb) continue;
      std::vector<Vec> others;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (i != j) others.push_back(all[i]);
      }
      if (auto r = express(others, all[j])) {
        victim = j;
        rel = std::move(*r);
        break;
      }
    }
    if (!victim) return d;
    const std::size_t j = *victim;
    // brick_j = sum rel_i brick_i (i != j) + c
    std::vector<ExpPoly> rest;
    for (std::size_t i = 0; i < d.bricks.size(); ++i) {
      if (i != j) rest.push_back(d.bricks[i]);
    }
    ExpPoly c = d.bricks[j];
    for (std::size_t i = 0; i < rest.size(); ++i) c = c - scaled(rest[i], rel[i]);
    if (!c.is_field_constant()) throw Error(ErrorCode::InvariantViolation, "brick relation leaves a non-constant");
    std::vector<PStarTerm> terms;
    for (const auto& t : d.pstar) {
      const Rational e = t.exps[j];
      PStarTerm nt{t.coeff, t.xdeg, {}};
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (i != j) nt.exps.push_back(t.exps[i]);
      }
      if (sgn(e) != 0) {
        for (std::size_t i = 0; i < rest.size(); ++i) nt.exps[i] += e * rel[i];
        nt.coeff = nt.coeff * ec::ep_exp(scaled(c, e));
      }
      terms.push_back(std::move(nt));
    }
    d.bricks = std::move(rest);
    d.pstar = merge(std::move(terms));
  }
}

ExpPoly reconstruct(const Decomposition& d) {
  const FieldPtr k = d.source.field();
  ExpPoly out(k);
  for (const auto& t : d.pstar) {
    ExpPoly g(k);
    for (std::size_t i = 0; i < d.bricks.size(); ++i) {
      if (sgn(t.exps[i]) != 0) g = g + scaled(d.bricks[i], t.exps[i]);
    }
    out = out + t.coeff * ec::pow(ExpPoly::x(k), static_cast<unsigned>(t.xdeg)) * ec::ep_exp(g);
  }
  return out;
}

bool covers(const std::vector<ExpPoly>& sources, const std::vector<ExpPoly>& bricks) {
  bool has_x = false;
  for (const auto& b : bricks) {
    if (!b.terms().empty() || b.poly_part().degree() != 1 || !b.poly_part().coeffs()[0].is_zero()) continue;
    const FieldElement& c = b.poly_part().coeffs()[1];
    if (c.is_rational() && abs(c.rational_part().get_num()) == 1) has_x = true;
  }
  if (!has_x) return false;
  std::vector<Vec> vecs;
  for (const auto& b : bricks) vecs.push_back(coords(b, false));
  // Every x-dependent exponent node, at any depth.
  std::vector<ExpPoly> todo(sources.begin(), sources.end());
  todo.insert(todo.end(), bricks.begin(), bricks.end());
  while (!todo.empty()) {
    ExpPoly e = std::move(todo.back());
    todo.pop_back();
    for (const auto& t : e.terms()) {
      const ExpPoly& g = *t.exponent;
      if (g.is_constant()) continue;
      if (!express(vecs, coords(g, true))) return false;
      todo.push_back(g);
    }
  }
  return true;
}

bool independent(const std::vector<ExpPoly>& bricks) {
  std::vector<Vec> vecs;
  for (const auto& b : bricks) {
    Vec v = coords(b, false);
    if (v.empty() || express(vecs, v)) return false;
    vecs.push_back(std::move(v));
  }
  return true;
}

}  // namespace expzero::dc
