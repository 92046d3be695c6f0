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

// Property checks shared by the unit tests and the acceptance runner. Each
// returns the number of failing cases and keeps the first counterexample.

#ifndef EXPZERO_TESTS_SUPPORT_PROPERTIES_HPP
#define EXPZERO_TESTS_SUPPORT_PROPERTIES_HPP

#include <functional>
#include <string>

#include "decomp/decomposition.hpp"
#include "frontend/parser.hpp"
#include "frontend/printer.hpp"
#include "support/generators.hpp"

namespace expzero::props {

using ec::ExpPoly;
using nf::FieldElement;
using nf::FieldPtr;
using nf::Rational;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
};

inline FieldPtr field_by_index(int i) {
  switch (i % 4) {
    case 0: return nf::NumberField::rationals();
    case 1: return testing::sqrt2_field();
    case 2: return testing::gaussian_field();
    default: return testing::cbrt2_field();
  }
}

inline Outcome field_axioms(std::size_t n, std::uint64_t seed) {
  Outcome out;
  for (int f = 0; f < 4; ++f) {
    testing::Gen g(seed + static_cast<std::uint64_t>(f), field_by_index(f));
    g.fractions = true;
    for (std::size_t i = f; i < n; i += 4) {
      ++out.cases;
      const FieldElement a = g.element(), b = g.element(), c = g.element();
      bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                a * (b + c) == a * b + a * c && (a - a).is_zero();
      if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
      if (!ok) out.fail(fe::print(a) + ", " + fe::print(b) + ", " + fe::print(c));
    }
  }
  return out;
}

inline ExpPoly rebuild(const ExpPoly& p) {
  ExpPoly out(p.poly_part());
  for (const auto& t : p.terms()) out = out + ExpPoly::term(t.coeff, rebuild(*t.exponent));
  return out;
}

inline Outcome ring_laws(std::size_t n, std::uint64_t seed) {
  Outcome out;
  for (int f = 0; f < 2; ++f) {
    testing::Gen g(seed + static_cast<std::uint64_t>(f), f == 0 ? nf::NumberField::rationals() : testing::sqrt2_field());
    g.max_degree = 2;
    g.max_terms = 2;
    for (std::size_t i = f; i < n; i += 2) {
      ++out.cases;
      const ExpPoly p = g.any(2), q = g.any(2), r = g.any(1);
      const bool ok = (p + q) + r == p + (q + r) && (p * q) * r == p * (q * r) && p + q == q + p && p * q == q * p &&
                      p * (q + r) == p * q + p * r && (p - p).is_zero() &&
                      ec::ep_exp(p + q) == ec::ep_exp(p) * ec::ep_exp(q) &&
                      (ec::ep_exp(p) == ec::ep_exp(q)) == (p == q);
      if (!ok) out.fail(fe::print(p) + " ; " + fe::print(q) + " ; " + fe::print(r));
    }
  }
  return out;
}

inline Outcome normalization_idempotent(std::size_t n, std::uint64_t seed) {
  Outcome out;
  testing::Gen g(seed, testing::sqrt2_field());
  for (std::size_t i = 0; i < n; ++i) {
    ++out.cases;
    const ExpPoly p = g.any(3);
    if (!(rebuild(p) == p) || !(rebuild(rebuild(p)) == rebuild(p))) out.fail(fe::print(p));
  }
  return out;
}

inline Outcome parse_print_roundtrip(std::size_t n, std::uint64_t seed) {
  Outcome out;
  for (int f = 0; f < 2; ++f) {
    testing::Gen g(seed + static_cast<std::uint64_t>(f), f == 0 ? nf::NumberField::rationals() : testing::sqrt2_field());
    g.fractions = true;
    for (std::size_t i = f; i < n; i += 2) {
      ++out.cases;
      const ExpPoly p = g.any(3);
      const std::string s = fe::print(p);
      try {
        const ExpPoly back = fe::parse(s);
        if (!(back == p) || fe::print(back) != s) out.fail(s);
      } catch (const std::exception& e) {
        out.fail(s + " (" + e.what() + ")");
      }
    }
  }
  return out;
}

inline Outcome decomposition_roundtrip(std::size_t n, std::uint64_t seed) {
  Outcome out;
  for (int f = 0; f < 2; ++f) {
    testing::Gen g(seed + static_cast<std::uint64_t>(f), f == 0 ? nf::NumberField::rationals() : testing::sqrt2_field());
    g.fractions = true;
    g.max_degree = 3;
    for (std::size_t i = f; i < n; i += 2) {
      ++out.cases;
      const ExpPoly p = g.any(3);
      const auto d = dc::decompose(p);
      if (!(dc::reconstruct(d) == p) || !(dc::reconstruct(dc::refine(d)) == p)) out.fail(fe::print(p));
    }
  }
  return out;
}

}  // namespace expzero::props

#endif  // EXPZERO_TESTS_SUPPORT_PROPERTIES_HPP
