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

#ifndef EXPZERO_NUMBERFIELD_FACTOR_HPP
#define EXPZERO_NUMBERFIELD_FACTOR_HPP

#include <vector>

#include "numberfield/qpoly.hpp"
#include "util/config.hpp"

namespace expzero::nf {

struct IntFactor {
  IntPoly poly;  // primitive, irreducible over Q, positive leading coefficient
  int multiplicity;
};

// Factorization over Q of a nonzero integer polynomial (Zassenhaus: modular
// factorization, Hensel lifting, exhaustive recombination). Content and sign
// are dropped; constant input yields an empty list. Throws DegreeCapExceeded
// above cfg.factor_degree_cap.
std::vector<IntFactor> factor(const IntPoly& f, const Config& cfg = default_config());

// Irreducible factors of the square-free part, each exactly once.
std::vector<IntPoly> irreducible_factors(const IntPoly& f, const Config& cfg = default_config());

bool is_irreducible(const IntPoly& f, const Config& cfg = default_config());

}  // namespace expzero::nf

#endif  // EXPZERO_NUMBERFIELD_FACTOR_HPP
