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

#include "numberfield/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "util/error.hpp"

namespace expzero::nf {
namespace {

using ModPoly = std::vector<std::int64_t>;

struct ModRing {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t mulm(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, base = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = mulm(r, base);
      base = mulm(base, base);
      e >>= 1;
    }
    return r;
  }

  void trim(ModPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  ModPoly reduce(const IntPoly& f) const {
    ModPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
      out[i] = static_cast<std::int64_t>(r.get_si());
    }
    trim(out);
    return out;
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = norm(out[i] - b[i]);
    trim(out);
    return out;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
  }
  ModPoly scale(const ModPoly& a, std::int64_t c) const {
    ModPoly out(a);
    for (auto& v : out) v = mulm(v, norm(c));
    trim(out);
    return out;
  }
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    ModPoly r = a;
    if (r.size() < b.size()) return {{}, r};
    ModPoly q(r.size() - b.size() + 1, 0);
    const std::int64_t li = inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
      const std::int64_t c = mulm(r[k + b.size() - 1], li);
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = norm(r[k + j] - c * b[j]);
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
    return {q, r};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(const ModPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // Inverse of a modulo m (assumed coprime).
  ModPoly inv_mod(const ModPoly& a, const ModPoly& m) const {
    ModPoly r0 = m, r1 = rem(a, m), t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    return scale(t0, inv(r0.back()));
  }
  ModPoly derivative(const ModPoly& f) const {
    if (f.size() <= 1) return {};
    ModPoly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mulm(f[i], norm(static_cast<std::int64_t>(i)));
    trim(out);
    return out;
  }
  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly result{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
};

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModRing& R, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer p(static_cast<long>(R.p));
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = R.powmod(h, p, f);
    ModPoly g = R.gcd(R.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = R.divmod(f, g).first;
      h = R.rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

void equal_degree(const ModRing& R, const ModPoly& f, int d, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(R.p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, R.p - 1);
  while (true) {
    ModPoly a(n);
    for (auto& c : a) c = dist(rng);
    R.trim(a);
    if (a.size() <= 1) continue;
    ModPoly g = R.gcd(a, f);
    if (g.size() <= 1) {
      ModPoly b = R.sub(R.powmod(a, e, f), ModPoly{1});
      g = R.gcd(b, f);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(R, g, d, rng, out);
      equal_degree(R, R.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

IntPoly mul_z(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Symmetric residue of every coefficient modulo m.
IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  IntPoly out(f.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (r > half) r -= m;
    out[i] = r;
  }
  trim(out);
  return out;
}

IntPoly lift_to_z(const ModPoly& f) {
  IntPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Integer(static_cast<long>(f[i]));
  return out;
}

// f primitive, square-free, degree >= 2, positive leading coefficient.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = degree(f);
  const Integer& lc = f.back();

  // Pick the prime (among the first few admissible) with the fewest
  // modular factors.
  std::int64_t best_p = 0;
  std::size_t best_count = 0;
  std::vector<std::pair<ModPoly, int>> best_ddf;
  int tried = 0;
  for (std::int64_t p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    ModRing R{p};
    ModPoly fp = R.reduce(f);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (R.gcd(fp, R.derivative(fp)).size() != 1) continue;
    ++tried;
    auto ddf = distinct_degree(R, R.monic(fp));
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += (g.size() - 1) / d;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
      best_ddf = std::move(ddf);
    }
    if (count == 1) break;
  }
  if (best_p == 0) throw Error(ErrorCode::InvariantViolation, "no admissible prime for factorization");
  if (best_count == 1) return {f};

  ModRing R{best_p};
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(n));
  std::vector<ModPoly> modular;
  for (const auto& [g, d] : best_ddf) equal_degree(R, g, d, rng, modular);
  const std::size_t r = modular.size();

  // Lifting bound: any factor times lc has coefficients below lc * 2^n * |f|_2.
  Integer norm2sq = 0;
  for (const auto& c : f) norm2sq += c * c;
  Integer norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2sq.get_mpz_t());
  norm2 += 1;
  Integer bound = abs(lc) * norm2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2;

  // Bezout-style cofactor inverses for linear multi-factor lifting.
  ModPoly full{1};
  for (const auto& g : modular) full = R.mul(full, g);
  std::vector<ModPoly> cof_inv(r);
  for (std::size_t i = 0; i < r; ++i) {
    ModPoly cof = R.divmod(full, modular[i]).first;
    cof_inv[i] = R.inv_mod(cof, modular[i]);
  }
  const std::int64_t lc_inv = R.inv(R.norm(static_cast<std::int64_t>(
      Integer(lc % Integer(static_cast<long>(best_p))).get_si())));

  std::vector<IntPoly> lifted(r);
  for (std::size_t i = 0; i < r; ++i) lifted[i] = lift_to_z(modular[i]);
  Integer modulus(static_cast<long>(best_p));
  const Integer pz(static_cast<long>(best_p));
  while (modulus <= bound) {
    IntPoly prod{lc};
    for (const auto& g : lifted) prod = mul_z(prod, g);
    IntPoly err(std::max(f.size(), prod.size()), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) err[i] += f[i];
    for (std::size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
    trim(err);
    ModPoly e;
    {
      IntPoly q(err.size());
      for (std::size_t i = 0; i < err.size(); ++i) mpz_divexact(q[i].get_mpz_t(), err[i].get_mpz_t(), modulus.get_mpz_t());
      e = R.scale(R.reduce(q), lc_inv);
    }
    for (std::size_t i = 0; i < r; ++i) {
      ModPoly delta = R.rem(R.mul(e, cof_inv[i]), modular[i]);
      for (std::size_t k = 0; k < delta.size(); ++k) lifted[i][k] += modulus * Integer(static_cast<long>(delta[k]));
    }
    modulus *= pz;
  }

  // Recombination over subsets of increasing size.
  std::vector<IntPoly> found;
  std::vector<IntPoly> remaining = lifted;
  IntPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      IntPoly cand{rest.back()};
      for (std::size_t i : idx) cand = mul_z(cand, remaining[i]);
      cand = symmetric_mod(cand, modulus);
      IntPoly quotient;
      if (!cand.empty() && degree(cand) > 0) {
        IntPoly pp = primitive_part(cand);
        if (divides_exactly(pp, rest, &quotient)) {
          found.push_back(pp);
          rest = primitive_part(quotient);
          std::vector<IntPoly> next;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
          remaining = std::move(next);
          progress = true;
          break;
        }
      }
      // Next combination.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++s;
  }
  if (degree(rest) > 0) found.push_back(rest);
  return found;
}

}  // namespace

std::vector<IntFactor> factor(const IntPoly& f_in, const Config& cfg) {
  IntPoly f = f_in;
  trim(f);
  if (f.empty()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  if (degree(f) > cfg.factor_degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded, "polynomial degree " + std::to_string(degree(f)) +
                                                  " exceeds factorization cap");
  std::vector<IntFactor> out;
  if (degree(f) == 0) return out;
  f = primitive_part(f);
  // x^k factors first; they are cheap and keep the modular step square-free.
  int xpow = 0;
  while (sgn(f[xpow]) == 0) ++xpow;
  if (xpow > 0) {
    out.push_back({IntPoly{Integer(0), Integer(1)}, xpow});
    f.erase(f.begin(), f.begin() + xpow);
  }
  auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (degree(parts[i]) <= 0) continue;
    std::vector<IntPoly> irr =
        degree(parts[i]) == 1 ? std::vector<IntPoly>{parts[i]} : zassenhaus(parts[i]);
    for (auto& g : irr) out.push_back({std::move(g), static_cast<int>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const IntFactor& a, const IntFactor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    return std::lexicographical_compare(a.poly.begin(), a.poly.end(), b.poly.begin(), b.poly.end());
  });
  return out;
}

std::vector<IntPoly> irreducible_factors(const IntPoly& f, const Config& cfg) {
  std::vector<IntPoly> out;
  for (auto& fac : factor(f, cfg)) out.push_back(std::move(fac.poly));
  return out;
}

bool is_irreducible(const IntPoly& f, const Config& cfg) {
  auto facs = factor(f, cfg);
  return facs.size() == 1 && facs[0].multiplicity == 1;
}

}  // namespace expzero::nf
