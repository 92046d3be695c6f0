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

#ifndef EXPZERO_NUMBERFIELD_LINALG_HPP
#define EXPZERO_NUMBERFIELD_LINALG_HPP

#include <optional>
#include <vector>

#include "numberfield/qpoly.hpp"

namespace expzero::nf {

using QMatrix = std::vector<std::vector<Rational>>;  // row major

// Solves A x = b for square nonsingular A; nullopt when singular.
std::optional<std::vector<Rational>> solve(QMatrix a, std::vector<Rational> b);

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> rref(QMatrix& a);

std::size_t rank(QMatrix a);

}  // namespace expzero::nf

#endif  // EXPZERO_NUMBERFIELD_LINALG_HPP
