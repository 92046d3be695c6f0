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

#include "numberfield/qpoly.hpp"

#include <cassert>
#include <sstream>

#include "util/error.hpp"

namespace expzero::nf {

int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }
int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(QPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}
void trim(IntPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

QPoly to_qpoly(const IntPoly& f) {
  QPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Rational(f[i]);
  return out;
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const QPoly& f) {
  if (f.empty()) throw Error(ErrorCode::ZeroPolynomial, "primitive part of zero polynomial");
  Integer den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational v = f[i] * den;
    out[i] = v.get_num();
  }
  return primitive_part(out);
}

IntPoly primitive_part(const IntPoly& f) {
  IntPoly out = f;
  trim(out);
  if (out.empty()) throw Error(ErrorCode::ZeroPolynomial, "primitive part of zero polynomial");
  Integer g = content(out);
  if (sgn(out.back()) < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  QPoly out(a);
  for (auto& v : out) v *= c;
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  QPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  const Rational lead_inv = 1 / b.back();
  for (int k = degree(r) - degree(b); k >= 0; --k) {
    const Rational c = r[k + b.size() - 1] * lead_inv;
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const Rational inv = 1 / r0.back();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

QPoly derivative(const QPoly& f) {
  if (f.size() <= 1) return {};
  QPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<long>(i);
  trim(out);
  return out;
}

Rational eval(const QPoly& f, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

QPoly compose_linear(const QPoly& f, const Rational& a, const Rational& b) {
  // Horner in the polynomial ring: acc = acc * (a + b t) + f_i.
  QPoly acc;
  const QPoly lin = sgn(b) == 0 ? QPoly{a} : QPoly{a, b};
  QPoly lin_trim = lin;
  trim(lin_trim);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = mul(acc, lin_trim);
    acc = add(acc, QPoly{f[i]});
  }
  return acc;
}

QPoly pow(const QPoly& f, int e) {
  QPoly out{Rational(1)};
  QPoly base = f;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

Rational resultant(const QPoly& a_in, const QPoly& b_in) {
  QPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Rational acc = 1;
  while (true) {
    const int da = degree(a), db = degree(b);
    if (db == 0) {
      Rational p = 1;
      for (int i = 0; i < da; ++i) p *= b[0];
      return acc * p;
    }
    if (da == 0) {
      Rational p = 1;
      for (int i = 0; i < db; ++i) p *= a[0];
      return acc * p;
    }
    QPoly r = rem(a, b);
    if (r.empty()) return 0;
    const int dr = degree(r);
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  assert(xs.size() == ys.size());
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> coef(ys);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  QPoly out;
  for (std::size_t k = n; k-- > 0;) {
    out = mul(out, QPoly{-xs[k], Rational(1)});
    out = add(out, QPoly{coef[k]});
  }
  return out;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& f_in) {
  QPoly f = monic(to_qpoly(f_in));
  if (f.empty()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<IntPoly> parts;
  if (degree(f) == 0) return parts;
  QPoly fp = derivative(f);
  QPoly b = gcd(f, fp);
  QPoly c = divmod(f, b).first;
  QPoly d = sub(divmod(fp, b).first, derivative(c));
  while (degree(c) > 0) {
    QPoly a = gcd(c, d);
    parts.push_back(primitive_part(a));
    c = divmod(c, a).first;
    d = sub(divmod(d, a).first, derivative(c));
  }
  return parts;
}

IntPoly squarefree_part(const IntPoly& f) {
  QPoly q = to_qpoly(f);
  trim(q);
  if (q.empty()) throw Error(ErrorCode::ZeroPolynomial, "square-free part of zero");
  QPoly g = gcd(q, derivative(q));
  return primitive_part(divmod(q, g).first);
}

bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  auto [q, r] = divmod(to_qpoly(a), to_qpoly(b));
  if (!r.empty()) return false;
  IntPoly out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return false;
    out[i] = q[i].get_num();
  }
  if (quotient) *quotient = std::move(out);
  return true;
}

std::string to_string(const IntPoly& f, char var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    const Integer& c = f[i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Rational pow2(long e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

}  // namespace expzero::nf
