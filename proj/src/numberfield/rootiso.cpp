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

#include "numberfield/rootiso.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "util/error.hpp"

namespace expzero::nf {
namespace {

// Smallest power of two strictly above the Cauchy root bound.
Rational root_bound(const IntPoly& f) {
  Rational m = 0;
  const Rational lead = abs(Rational(f.back()));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    Rational v = abs(Rational(f[i])) / lead;
    if (v > m) m = v;
  }
  Rational bound = 1 + m;
  Rational w = 1;
  while (w <= bound) w *= 2;
  return w;
}

int sign_at(const QPoly& f, const Rational& x) { return sgn(eval(f, x)); }

std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> seq{f, derivative(f)};
  while (!seq.back().empty()) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    seq.push_back(scale(r, -1));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    const int v = sign_at(s, x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Taylor coefficients of f at c.
std::vector<CQ> taylor_shift(const IntPoly& f, const CQ& c) {
  const std::size_t n = f.size();
  std::vector<CQ> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = {Rational(f[i]), Rational(0)};
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] = a[j] + c * a[j + 1];
  return a;
}

CQ eval_deriv(const IntPoly& f, const CQ& z) {
  CQ acc{0, 0};
  for (std::size_t i = f.size(); i-- > 1;) {
    acc = acc * z + CQ{Rational(f[i] * static_cast<long>(i)), Rational(0)};
  }
  return acc;
}

// Round q to the dyadic grid of step 2^-bits.
Rational round_dyadic(const Rational& q, long bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(bits));
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Rational out = Rational(r) * pow2(-bits);
  out.canonicalize();
  return out;
}

long bits_for(const Rational& target) {
  // Smallest b with 2^-b <= target (target > 0).
  long b = static_cast<long>(mpz_sizeinbase(target.get_den_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(target.get_num_mpz_t(), 2)) + 1;
  while (pow2(-b) > target) ++b;
  return std::max(b, 0L);
}

void check_cap(const Rational& target, const Config& cfg) {
  if (target < pow2(-cfg.precision_cap_bits))
    throw Error(ErrorCode::PrecisionCapExceeded,
                "root refinement beyond 2^-" + std::to_string(cfg.precision_cap_bits));
}

struct Square {
  CQ c;
  Rational h;  // half width
  Rectangle rect() const { return {c.re - h, c.re + h, c.im - h, c.im + h}; }
};

// Distance test: closed disk D(c, r) strictly away from the rectangle.
bool disk_disjoint(const CQ& c, const Rational& r, const Rectangle& rect) {
  Rational dx = 0, dy = 0;
  if (c.re < rect.re_lo) dx = rect.re_lo - c.re;
  else if (c.re > rect.re_hi) dx = c.re - rect.re_hi;
  if (c.im < rect.im_lo) dy = rect.im_lo - c.im;
  else if (c.im > rect.im_hi) dy = c.im - rect.im_hi;
  return dx * dx + dy * dy > r * r;
}

bool disk_inside(const CQ& c, const Rational& r, const Rectangle& rect) {
  return c.re - r > rect.re_lo && c.re + r < rect.re_hi && c.im - r > rect.im_lo &&
         c.im + r < rect.im_hi;
}

std::vector<Rectangle> isolate_real(const IntPoly& f, const Config& cfg) {
  const QPoly q = to_qpoly(f);
  const auto seq = sturm_sequence(q);
  const Rational w = root_bound(f);
  std::vector<Rectangle> out;
  struct Interval {
    Rational lo, hi;
    int count;
  };
  std::vector<Interval> work;
  const int total = sign_variations(seq, -w) - sign_variations(seq, w);
  if (total > 0) work.push_back({-w, w, total});
  const Rational floor_width = pow2(-cfg.precision_cap_bits);
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      out.push_back({iv.lo, iv.hi, 0, 0});
      continue;
    }
    if (iv.hi - iv.lo < floor_width)
      throw Error(ErrorCode::PrecisionCapExceeded, "real root separation below precision cap");
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sign_at(q, mid) == 0) {
      out.push_back({mid, mid, 0, 0});
      // Step off the exact root so both halves have nonzero endpoints.
      Rational eps = (iv.hi - iv.lo) / 64;
      while (sign_at(q, mid - eps) == 0 || sign_at(q, mid + eps) == 0 ||
             sign_variations(seq, mid - eps) - sign_variations(seq, mid + eps) != 1)
        eps /= 2;
      const int left = sign_variations(seq, iv.lo) - sign_variations(seq, mid - eps);
      const int right = sign_variations(seq, mid + eps) - sign_variations(seq, iv.hi);
      work.push_back({iv.lo, mid - eps, left});
      work.push_back({mid + eps, iv.hi, right});
      continue;
    }
    const int vm = sign_variations(seq, mid);
    work.push_back({iv.lo, mid, sign_variations(seq, iv.lo) - vm});
    work.push_back({mid, iv.hi, vm - sign_variations(seq, iv.hi)});
  }
  return out;
}

std::vector<Rectangle> isolate_upper(const IntPoly& f, int wanted, const Config& cfg) {
  std::vector<Rectangle> frozen;
  if (wanted == 0) return frozen;
  const Rational w = root_bound(f);
  std::vector<Square> active{{{-w / 2, w / 2}, w / 2}, {{w / 2, w / 2}, w / 2}};
  const Rational floor_h = pow2(-cfg.precision_cap_bits);
  const Rational three_halves(3, 2);

  while (true) {
    std::vector<Square> kept;
    for (const auto& s : active)
      if (!pellet_test(f, s.c, s.h * three_halves, 0)) kept.push_back(s);
    active = std::move(kept);

    // Connected components of closed squares.
    const std::size_t m = active.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (intersects(active[i].rect(), active[j].rect())) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> comps;
    {
      std::vector<long> slot(m, -1);
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = find(i);
        if (slot[r] < 0) {
          slot[r] = static_cast<long>(comps.size());
          comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[r])].push_back(i);
      }
    }

    std::vector<bool> done(m, false);
    for (const auto& comp : comps) {
      Rectangle bb = active[comp[0]].rect();
      for (std::size_t i : comp) bb = hull(bb, active[i].rect());
      if (sgn(bb.im_lo) <= 0) continue;  // may still hold a real root
      const CQ c = bb.center();
      const Rational r = bb.width() + bb.height();
      bool clear = true;
      for (std::size_t j = 0; j < m && clear; ++j) {
        if (std::find(comp.begin(), comp.end(), j) != comp.end()) continue;
        if (done[j]) continue;
        const Rectangle other = active[j].rect();
        clear = disk_disjoint(c, r, other) && !intersects(bb, other);
      }
      for (std::size_t j = 0; j < frozen.size() && clear; ++j)
        clear = disk_disjoint(c, r, frozen[j]) && !intersects(bb, frozen[j]);
      if (clear) {
        for (std::size_t j = 0; j < m && clear; ++j)
          if (done[j]) clear = disk_disjoint(c, r, active[j].rect());
      }
      if (!clear || !pellet_test(f, c, r, 1)) continue;
      frozen.push_back(bb);
      for (std::size_t i : comp) done[i] = true;
    }
    if (static_cast<int>(frozen.size()) >= wanted) break;

    std::vector<Square> next;
    for (std::size_t i = 0; i < m; ++i) {
      if (done[i]) continue;
      const Square& s = active[i];
      const Rational h = s.h / 2;
      if (h < floor_h)
        throw Error(ErrorCode::PrecisionCapExceeded, "complex root separation below precision cap");
      for (int dx = -1; dx <= 1; dx += 2)
        for (int dy = -1; dy <= 1; dy += 2) {
          Square t{{s.c.re + h * dx, s.c.im + h * dy}, h};
          if (sgn(t.c.im + h) <= 0) continue;  // stay in the closed upper half plane
          next.push_back(t);
        }
    }
    active = std::move(next);
  }
  return frozen;
}

Rectangle refine_real(const IntPoly& f, Rectangle box, const Rational& target) {
  const QPoly q = to_qpoly(f);
  int slo = sign_at(q, box.re_lo);
  while (box.width() > target) {
    Rational mid = (box.re_lo + box.re_hi) / 2;
    const int sm = sign_at(q, mid);
    if (sm == 0) return {mid, mid, 0, 0};
    if (sm == slo) {
      box.re_lo = mid;
    } else {
      box.re_hi = mid;
    }
  }
  return box;
}

Rectangle refine_complex(const IntPoly& f, const Rectangle& ref, const Rational& target) {
  const long bits = bits_for(target) + 8;
  std::vector<Rectangle> survivors{ref};
  auto bbox = [&] {
    Rectangle bb = survivors[0];
    for (const auto& r : survivors) bb = hull(bb, r);
    return bb;
  };
  Rectangle bb = ref;
  for (int guard = 0; bb.size() > target; ++guard) {
    if (guard > 100000) throw Error(ErrorCode::PrecisionCapExceeded, "root refinement did not converge");
    // Newton step from the current center, certified by a one-root disk
    // inside the reference rectangle.
    bool advanced = false;
    const CQ z = bb.center();
    const CQ dz = eval_deriv(f, z);
    if (!is_zero(dz)) {
      CQ z1 = z - eval(f, z) / dz;
      const long step_bits = std::min(bits, 2 * bits_for(bb.size()) + 16);
      z1 = {round_dyadic(z1.re, step_bits), round_dyadic(z1.im, step_bits)};
      const CQ dz1 = eval_deriv(f, z1);
      if (!is_zero(dz1)) {
        Rational rho = 2 * abs_upper(eval(f, z1) / dz1) + pow2(-step_bits);
        if (rho * 4 <= bb.size() && disk_inside(z1, rho, ref) && pellet_test(f, z1, rho, 1)) {
          Rectangle sq{z1.re - rho, z1.re + rho, z1.im - rho, z1.im + rho};
          survivors = {intersection(sq, ref)};
          advanced = true;
        }
      }
    }
    if (!advanced) {
      std::vector<Rectangle> next;
      for (const auto& r : survivors) {
        const Rational mx = (r.re_lo + r.re_hi) / 2, my = (r.im_lo + r.im_hi) / 2;
        const Rectangle parts[4] = {{r.re_lo, mx, r.im_lo, my},
                                    {mx, r.re_hi, r.im_lo, my},
                                    {r.re_lo, mx, my, r.im_hi},
                                    {mx, r.re_hi, my, r.im_hi}};
        for (const auto& p : parts) {
          const Rational rad = (p.width() + p.height()) / 2;
          if (!pellet_test(f, p.center(), rad, 0)) next.push_back(p);
        }
      }
      if (next.empty()) throw Error(ErrorCode::InvariantViolation, "isolating box lost its root");
      survivors = std::move(next);
    }
    bb = bbox();
  }
  return bb;
}

// f restricted to the line {z0 + s*dir : s real}, split into real and
// imaginary parts as polynomials in s.
std::pair<QPoly, QPoly> restrict_to_line(const IntPoly& f, const CQ& z0, const CQ& dir) {
  QPoly re_acc, im_acc;
  for (std::size_t i = f.size(); i-- > 0;) {
    // acc = acc * (z0 + s*dir) + f[i]
    QPoly nre = sub(add(scale(re_acc, z0.re), mul(re_acc, QPoly{0, dir.re})),
                    add(scale(im_acc, z0.im), mul(im_acc, QPoly{0, dir.im})));
    QPoly nim = add(add(scale(im_acc, z0.re), mul(im_acc, QPoly{0, dir.re})),
                    add(scale(re_acc, z0.im), mul(re_acc, QPoly{0, dir.im})));
    nre = add(nre, QPoly{Rational(f[i])});
    trim(nre);
    trim(nim);
    re_acc = std::move(nre);
    im_acc = std::move(nim);
  }
  return {re_acc, im_acc};
}

bool has_real_root_in(const QPoly& g, const Rational& lo, const Rational& hi) {
  if (degree(g) < 1 || lo > hi) return false;
  if (sgn(eval(g, lo)) == 0) return true;
  return lo < hi && count_real_roots(g, lo, hi) > 0;
}

// Exact test for a root of f on the segment [a, b] of the boundary of box,
// restricted to the window `iso`.
bool root_on_segment(const IntPoly& f, const CQ& a, const CQ& b, const Rectangle& iso) {
  const CQ dir = b - a;
  if (is_zero(dir)) return contains(iso, a) && is_zero(eval(f, a));
  auto [re, im] = restrict_to_line(f, a, dir);
  QPoly g = re.empty() ? im : (im.empty() ? re : gcd(re, im));
  // Parameter range where the segment meets iso.
  Rational lo = 0, hi = 1;
  auto clip = [&](const Rational& p0, const Rational& d, const Rational& mn, const Rational& mx) {
    if (sgn(d) == 0) {
      if (p0 < mn || p0 > mx) hi = -1;
      return;
    }
    Rational t1 = (mn - p0) / d, t2 = (mx - p0) / d;
    if (t1 > t2) std::swap(t1, t2);
    if (t1 > lo) lo = t1;
    if (t2 < hi) hi = t2;
  };
  clip(a.re, dir.re, iso.re_lo, iso.re_hi);
  clip(a.im, dir.im, iso.im_lo, iso.im_hi);
  return has_real_root_in(g, lo, hi);
}

bool root_on_boundary(const IntPoly& f, const Rectangle& iso, const Rectangle& box) {
  const CQ c00{box.re_lo, box.im_lo}, c10{box.re_hi, box.im_lo};
  const CQ c01{box.re_lo, box.im_hi}, c11{box.re_hi, box.im_hi};
  return root_on_segment(f, c00, c10, iso) || root_on_segment(f, c01, c11, iso) ||
         root_on_segment(f, c00, c01, iso) || root_on_segment(f, c10, c11, iso);
}

}  // namespace

CQ eval(const IntPoly& f, const CQ& z) {
  CQ acc{0, 0};
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * z + CQ{Rational(f[i]), Rational(0)};
  return acc;
}

int count_real_roots(const QPoly& f, const Rational& a, const Rational& b) {
  const auto seq = sturm_sequence(f);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

bool pellet_test(const IntPoly& f, const CQ& c, const Rational& r, int k) {
  const auto b = taylor_shift(f, c);
  Rational rpow = 1, rhs = 0, lhs = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (static_cast<int>(j) == k) {
      lhs = abs_lower(b[j]) * rpow;
    } else if (!is_zero(b[j])) {
      rhs += abs_upper(b[j]) * rpow;
    }
    rpow *= r;
  }
  return lhs > rhs;
}

std::vector<Rectangle> isolate_complex_roots(const IntPoly& f_in, const Config& cfg) {
  IntPoly f = f_in;
  trim(f);
  if (f.empty()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of zero");
  std::vector<Rectangle> out;
  const int n = degree(f);
  if (n == 0) return out;
  if (n == 1) {
    Rational root = Rational(-f[0]) / Rational(f[1]);
    root.canonicalize();
    out.push_back({root, root, 0, 0});
    return out;
  }
  out = isolate_real(f, cfg);
  const int nreal = static_cast<int>(out.size());
  if ((n - nreal) % 2 != 0) throw Error(ErrorCode::NotSquareFree, "root isolation needs a square-free polynomial");
  for (const auto& r : isolate_upper(f, (n - nreal) / 2, cfg)) {
    out.push_back(r);
    out.push_back(r.conjugate());
  }
  std::sort(out.begin(), out.end(), [](const Rectangle& a, const Rectangle& b) {
    const CQ ca = a.center(), cb = b.center();
    if (ca.re != cb.re) return ca.re < cb.re;
    return ca.im < cb.im;
  });
  return out;
}

Rectangle refine_root_box(const IntPoly& f, const Rectangle& box, const Rational& target,
                          const Config& cfg) {
  if (box.is_point() || box.size() <= target) return box;
  check_cap(target, cfg);
  if (box.is_real_interval()) return refine_real(f, box, target);
  return refine_complex(f, box, target);
}

bool root_in_box(const IntPoly& f, const Rectangle& iso_in, const Rectangle& box,
                 const Config& cfg) {
  Rectangle iso = iso_in;
  bool boundary_checked = false;
  Rational target = iso.size() / 2;
  const Rational floor = pow2(-cfg.precision_cap_bits);
  while (true) {
    if (contains(box, iso)) return true;
    if (!intersects(box, iso)) return false;
    if (iso.is_point()) return contains(box, iso.center());
    if (!boundary_checked && iso.size() * (1 << 20) < 1 + box.size()) {
      if (root_on_boundary(f, iso, box)) return true;
      boundary_checked = true;
    }
    if (target < floor) throw Error(ErrorCode::PrecisionCapExceeded, "could not place root relative to box");
    iso = refine_root_box(f, iso, target, cfg);
    target = iso.size() / 2;
  }
}

int count_roots_in_box(const IntPoly& f, const Rectangle& box, const Config& cfg) {
  int n = 0;
  for (const auto& iso : isolate_complex_roots(f, cfg)) {
    if (root_in_box(f, iso, box, cfg)) ++n;
  }
  return n;
}

}  // namespace expzero::nf
