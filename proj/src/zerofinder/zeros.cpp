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

#include "zerofinder/zeros.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "numeric/eval.hpp"
#include "util/error.hpp"
#include "zerofinder/mpoly.hpp"

namespace expzero::zf {

using ec::CanonicalLess;
using nf::Extension;
using nf::FieldPoly;
using nf::FieldPtr;
using nf::Integer;
using nf::Rational;

const char* coprimality_name(Coprimality c) noexcept {
  switch (c) {
    case Coprimality::Coprime: return "coprime";
    case Coprimality::CommonFactor: return "common_factor";
    case Coprimality::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<Item> items(const ExpPoly& p) {
  std::vector<Item> out;
  if (!p.poly_part().is_zero()) out.push_back({p.poly_part(), ExpPoly(p.field())});
  for (const auto& t : p.terms()) out.push_back({t.coeff, *t.exponent});
  return out;
}

bool const_is_zero(const ExpPoly& c) {
  if (!c.is_constant()) throw Error(ErrorCode::NotConstant, "const_is_zero on a non-constant");
  if (c.is_zero()) return true;
  struct Class {
    ExpPoly exponent;
    FieldElement sum;
  };
  std::vector<Class> classes;
  for (const auto& it : items(c)) {
    const FieldElement a = it.coeff.coeff(0);
    auto cls = std::find_if(classes.begin(), classes.end(),
                            [&](const Class& k) { return const_is_zero(it.exponent - k.exponent); });
    if (cls == classes.end()) {
      classes.push_back({it.exponent, a});
    } else {
      cls->sum = cls->sum + a;
    }
  }
  return std::all_of(classes.begin(), classes.end(), [](const Class& k) { return k.sum.is_zero(); });
}

namespace {

ExpPoly onto(const ExpPoly& p, const FieldElement& beta) {
  if (nf::same_field(p.field(), beta.field()) || p.field()->is_rational() || beta.field()->is_rational()) return p;
  throw Error(ErrorCode::FieldMismatch, "point and polynomial live in different fields");
}

// p over the field of r, and r as an element there.
std::pair<ExpPoly, FieldElement> at_root(const ExpPoly& p, const AlgebraicRoot& r, const Config& cfg) {
  const Extension ext = nf::root_to_element(r, p.field(), cfg);
  return {ec::map_field(p, ext.embedding), ext.adjoined};
}

}  // namespace

bool is_zero_at(const ExpPoly& p, const FieldElement& beta) {
  return const_is_zero(ec::eval_at(onto(p, beta), beta));
}

bool is_zero_at(const ExpPoly& p, const AlgebraicRoot& beta, const Config& cfg) {
  const auto [q, b] = at_root(p, beta, cfg);
  return is_zero_at(q, b);
}

std::optional<CollapseWitness> collapse_test(const ExpPoly& p, const FieldElement& beta) {
  const std::vector<Item> its = items(onto(p, beta));
  if (its.empty()) return std::nullopt;
  if (std::all_of(its.begin(), its.end(), [&](const Item& it) { return it.coeff.eval(beta).is_zero(); })) {
    return CollapseWitness{CollapseWitness::Kind::AllCoeffsVanish, 0, 0};
  }
  std::vector<ExpPoly> values;
  for (const auto& it : its) values.push_back(ec::eval_at(it.exponent, beta));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (const_is_zero(values[i] - values[j])) return CollapseWitness{CollapseWitness::Kind::ExponentCollision, i, j};
    }
  }
  return std::nullopt;
}

std::optional<CollapseWitness> collapse_test(const ExpPoly& p, const AlgebraicRoot& beta, const Config& cfg) {
  const auto [q, b] = at_root(p, beta, cfg);
  return collapse_test(q, b);
}

bool verify_witness(const ExpPoly& p, const AlgebraicRoot& beta, const CollapseWitness& w, const Config& cfg) {
  const auto [q, b] = at_root(p, beta, cfg);
  const std::vector<Item> its = items(q);
  if (w.kind == CollapseWitness::Kind::AllCoeffsVanish) {
    return !its.empty() &&
           std::all_of(its.begin(), its.end(), [&](const Item& it) { return it.coeff.eval(b).is_zero(); });
  }
  if (w.i >= w.j || w.j >= its.size()) return false;
  return const_is_zero(ec::eval_at(its[w.i].exponent, b) - ec::eval_at(its[w.j].exponent, b));
}

namespace {

struct Found {
  AlgebraicRoot root;
  CollapseWitness witness;
};

struct Enumerator {
  const Config& cfg;
  std::map<ExpPoly, std::vector<AlgebraicRoot>, CanonicalLess> memo;
  std::size_t examined = 0;
  int max_depth = 0;
  // Rejected top-level candidates, with whether a ball already excluded 0.
  std::vector<std::pair<AlgebraicRoot, bool>> rejected;

  static AlgebraicRoot plain(AlgebraicRoot r) {
    r.multiplicity = 1;
    return r;
  }

  std::vector<AlgebraicRoot> dedupe(std::vector<AlgebraicRoot> c) const {
    std::vector<AlgebraicRoot> out;
    for (auto& r : c) {
      if (std::none_of(out.begin(), out.end(), [&](const AlgebraicRoot& s) { return nf::root_eq(s, r, cfg); })) {
        out.push_back(plain(std::move(r)));
      }
    }
    return nf::separate(std::move(out), cfg);
  }

  std::vector<AlgebraicRoot> candidates(const ExpPoly& p, int depth) {
    const std::vector<Item> its = items(p);
    std::vector<AlgebraicRoot> cand;
    FieldPoly g(p.field());
    for (const auto& it : its) g = nf::gcd(g, it.coeff);
    if (g.degree() >= 1) {
      for (auto& r : nf::isolate_roots(g, cfg)) cand.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < its.size(); ++i) {
      for (std::size_t j = i + 1; j < its.size(); ++j) {
        const ExpPoly d = its[i].exponent - its[j].exponent;
        if (d.is_constant()) {
          if (const_is_zero(d)) throw Error(ErrorCode::InvariantViolation, "distinct exponents with zero difference");
          continue;
        }
        if (d.height() >= p.height()) throw Error(ErrorCode::InvariantViolation, "recursion does not lower the height");
        for (const auto& r : zeros(d, depth + 1)) cand.push_back(r);
      }
    }
    return dedupe(std::move(cand));
  }

  std::vector<AlgebraicRoot> top_candidates;

  std::vector<Found> verified(const ExpPoly& p, int depth) {
    std::vector<Found> out;
    std::vector<AlgebraicRoot> cand = candidates(p, depth);
    if (depth == 0) top_candidates = cand;
    for (auto& r : cand) {
      ++examined;
      const numeric::Precision low{64};
      if (numeric::eval_ball(p, numeric::root_ball(r, low), low).excludes_zero()) {
        if (depth == 0) rejected.emplace_back(std::move(r), true);
        continue;
      }
      const auto [q, b] = at_root(p, r, cfg);
      if (!is_zero_at(q, b)) {
        if (depth == 0) rejected.emplace_back(std::move(r), false);
        continue;
      }
      const auto w = collapse_test(q, b);
      if (!w) throw Error(ErrorCode::InvariantViolation, "zero without a collapse witness");
      out.push_back({std::move(r), *w});
    }
    return out;
  }

  std::vector<AlgebraicRoot> zeros(const ExpPoly& p, int depth) {
    if (depth > cfg.max_height) throw Error(ErrorCode::DepthCapExceeded, "zero enumeration exceeded the depth cap");
    max_depth = std::max(max_depth, depth);
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::vector<AlgebraicRoot> out;
    if (p.height() == 0) {
      // Every root of a polynomial is a zero of it.
      for (auto& r : nf::isolate_roots(p.poly_part(), cfg)) out.push_back(plain(std::move(r)));
    } else {
      for (auto& f : verified(p, depth)) out.push_back(std::move(f.root));
    }
    memo.emplace(p, out);
    return out;
  }
};

void numeric_checks(const ExpPoly& p, ZeroReport& rep, const std::vector<std::pair<AlgebraicRoot, bool>>& rejected,
                    const ZeroOptions& opt) {
  using numeric::Precision;
  for (const auto& z : rep.zeros) {
    for (int bits : {64, 128, 256}) {
      if (bits > opt.precision_bits) break;
      const Precision prec{bits};
      if (!numeric::eval_ball(p, numeric::root_ball(z, prec), prec).contains_zero()) {
        throw Error(ErrorCode::InvariantViolation, "ball evaluation excludes 0 at a symbolic zero");
      }
    }
  }
  for (const auto& [r, certified] : rejected) {
    if (!certified && !numeric::certify_nonzero(p, r, Precision{opt.precision_bits})) {
      rep.diagnostics.push_back(
          {"uncertified_rejection", r, "no enclosure excluding 0 up to " + std::to_string(opt.precision_bits) + " bits"});
    }
  }
}

}  // namespace

ZeroReport algebraic_zeros(const ExpPoly& p, const ZeroOptions& opt) {
  if (p.is_zero()) throw Error(ErrorCode::IdenticallyZero, "the zero polynomial vanishes everywhere");
  Enumerator en{opt.cfg, {}, 0, 0, {}, {}};
  ZeroReport rep;
  if (p.height() == 0) {
    rep.zeros = en.zeros(p, 0);
    rep.candidates = rep.zeros;
    rep.candidates_examined = rep.zeros.size();
    rep.witnesses.assign(rep.zeros.size(), CollapseWitness{});
  } else {
    for (auto& f : en.verified(p, 0)) {
      rep.zeros.push_back(std::move(f.root));
      rep.witnesses.push_back(f.witness);
    }
    rep.candidates_examined = en.examined;
    rep.candidates = std::move(en.top_candidates);
  }
  rep.recursion_depth = en.max_depth;
  if (opt.numeric_check) numeric_checks(p, rep, en.rejected, opt);
  return rep;
}

ZeroReport common_zeros(const ExpPoly& p, const ExpPoly& q, const ZeroOptions& opt) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::IdenticallyZero, "the zero polynomial vanishes everywhere");
  const ZeroReport rp = algebraic_zeros(p, opt);
  const ZeroReport rq = algebraic_zeros(q, opt);
  ZeroReport rep;
  for (std::size_t i = 0; i < rp.zeros.size(); ++i) {
    for (std::size_t j = 0; j < rq.zeros.size(); ++j) {
      if (!nf::root_eq(rp.zeros[i], rq.zeros[j], opt.cfg)) continue;
      rep.zeros.push_back(rp.zeros[i]);
      rep.witnesses.push_back(rp.witnesses[i]);
      rep.second_witnesses.push_back(rq.witnesses[j]);
      break;
    }
  }
  rep.candidates_examined = rp.candidates_examined + rq.candidates_examined;
  rep.candidates = rp.candidates;
  for (const auto& r : rq.candidates) {
    if (std::none_of(rep.candidates.begin(), rep.candidates.end(),
                     [&](const AlgebraicRoot& s) { return nf::root_eq(s, r, opt.cfg); })) {
      rep.candidates.push_back(r);
    }
  }
  rep.candidates = nf::separate(std::move(rep.candidates), opt.cfg);
  rep.recursion_depth = std::max(rp.recursion_depth, rq.recursion_depth);
  rep.diagnostics = rp.diagnostics;
  rep.diagnostics.insert(rep.diagnostics.end(), rq.diagnostics.begin(), rq.diagnostics.end());
  if (p.height() <= 1 && q.height() <= 1) {
    const auto ds = dc::decompose_shared({p, q});
    const dc::Decomposition a = dc::refine(ds[0]), b = dc::refine(ds[1]);
    rep.complete_for_all_common_zeros = coprime_check(a, b, opt.cfg) == Coprimality::Coprime;
  }
  return rep;
}

namespace {

std::optional<MPoly> to_mpoly(const dc::Decomposition& d, const FieldPtr& field, const std::vector<Integer>& den) {
  const int n = static_cast<int>(den.size()) + 1;
  MPoly out(field, n);
  for (const auto& t : d.pstar) {
    if (!t.coeff.is_field_constant()) return std::nullopt;
    Monomial m(static_cast<std::size_t>(n), 0);
    m[0] = t.xdeg;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      const Rational e = t.exps[i] * Rational(den[i]);
      m[i + 1] = static_cast<int>(e.get_num().get_si());
    }
    const FieldElement c = ec::lift(t.coeff, field).poly_part().coeff(0);
    out.add_term(m, c);
  }
  // Laurent monomials in the Z variables are units.
  if (out.is_zero()) return out;
  Monomial low(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    int lo = INT_MAX;
    for (const auto& [m, _] : out.terms()) lo = std::min(lo, m[static_cast<std::size_t>(v)]);
    low[static_cast<std::size_t>(v)] = lo;
  }
  MPoly shifted(field, n);
  for (const auto& [m, c] : out.terms()) {
    Monomial k = m;
    for (std::size_t v = 1; v < k.size(); ++v) k[v] -= low[v];
    shifted.add_term(k, c);
  }
  return shifted;
}

}  // namespace

Coprimality coprime_check(const dc::Decomposition& dp, const dc::Decomposition& dq, const Config& cfg) {
  if (dp.bricks.size() != dq.bricks.size()) {
    throw Error(ErrorCode::InvariantViolation, "coprime_check needs a shared brick set");
  }
  for (std::size_t i = 0; i < dp.bricks.size(); ++i) {
    if (!(dp.bricks[i] == dq.bricks[i])) throw Error(ErrorCode::InvariantViolation, "coprime_check needs a shared brick set");
  }
  const FieldPtr field = ec::common_field(dp.source, dq.source);
  std::vector<Integer> den(dp.bricks.size(), 1);
  for (const auto* d : {&dp, &dq}) {
    for (const auto& t : d->pstar) {
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        mpz_lcm(den[i].get_mpz_t(), den[i].get_mpz_t(), t.exps[i].get_den_mpz_t());
      }
    }
  }
  for (const auto* d : {&dp, &dq}) {
    for (const auto& t : d->pstar) {
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (abs(t.exps[i] * Rational(den[i])) > cfg.coprime_degree_cap * 64) return Coprimality::Unknown;
      }
    }
  }
  const auto a = to_mpoly(dp, field, den), b = to_mpoly(dq, field, den);
  if (!a || !b) return Coprimality::Unknown;
  if (a->total_degree() > cfg.coprime_degree_cap || b->total_degree() > cfg.coprime_degree_cap) {
    return Coprimality::Unknown;
  }
  return gcd(*a, *b).is_constant() ? Coprimality::Coprime : Coprimality::CommonFactor;
}

}  // namespace expzero::zf
