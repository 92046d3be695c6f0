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

// Reference computations used to check library results. None of these call
// into the library.

#ifndef EXPZERO_TESTS_SUPPORT_ORACLES_HPP
#define EXPZERO_TESTS_SUPPORT_ORACLES_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace expzero::oracle {

using Q = mpq_class;
using Z = mpz_class;

// Polynomials over Q, lowest degree first, trimmed.
using Poly = std::vector<Q>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly make(std::vector<Q> c) {
  trim(c);
  return c;
}

inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly rem(Poly a, const Poly& b) {
  while (deg(a) >= deg(b)) {
    const Q f = a.back() / b.back();
    const int s = deg(a) - deg(b);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(s)] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Poly monic(Poly a) {
  const Q lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

inline Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline Q eval(const Poly& p, const Q& x) {
  Q v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// Number of distinct complex roots.
inline int distinct_roots(const Poly& p) {
  if (deg(p) < 1) return 0;
  return deg(p) - deg(gcd(p, derivative(p)));
}

// Root of p in [lo, hi] to within 2^-bits; p(lo) and p(hi) of opposite sign.
inline Q bisect(const Poly& p, Q lo, Q hi, int bits) {
  const int slo = sgn(eval(p, lo));
  const Q eps = Q(1, Z(1) << bits);
  while (hi - lo > eps) {
    Q mid = (lo + hi) / 2;
    const int s = sgn(eval(p, mid));
    if (s == 0) return mid;
    (s == slo ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

// e = sum 1/k!, truncated once the tail bound 2/(n+1)! drops below 10^-(digits+5).
inline std::string e_digits(int digits) {
  Q sum = 0, term = 1;
  Z fact = 1;
  const Z scale = [&] {
    Z s = 1;
    for (int i = 0; i < digits + 5; ++i) s *= 10;
    return s;
  }();
  for (long k = 0;; ++k) {
    if (k > 0) fact *= k;
    sum += Q(1, fact);
    if (fact * (k + 1) > 2 * scale) break;
  }
  // Truncate to `digits` decimals after the point.
  Z ten = 1;
  for (int i = 0; i < digits; ++i) ten *= 10;
  Z t = (sum.get_num() * ten) / sum.get_den();
  std::string s = t.get_str();
  return s.substr(0, 1) + "." + s.substr(1);
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239); returns pi within 2^-bits.
inline Q pi(int bits) {
  auto atan_inv = [&](long n) {
    Q sum = 0, pw(1, n);
    const Q eps(1, Z(1) << (bits + 8));
    for (long k = 0;; ++k) {
      const Q term = pw / (2 * k + 1);
      sum += (k % 2 == 0) ? term : Q(-term);
      if (term < eps) break;
      pw /= n * n;
    }
    return sum;
  };
  return 16 * atan_inv(5) - 4 * atan_inv(239);
}

}  // namespace expzero::oracle

#endif  // EXPZERO_TESTS_SUPPORT_ORACLES_HPP
