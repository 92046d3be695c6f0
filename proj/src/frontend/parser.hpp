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

#ifndef EXPZERO_FRONTEND_PARSER_HPP
#define EXPZERO_FRONTEND_PARSER_HPP

#include <string>
#include <vector>

#include "expcore/exppoly.hpp"
#include "util/config.hpp"

namespace expzero::fe {

// Grammar:
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor (('*' factor) | ('/' posint) | factor)*
//   factor   := base ('^' natural)?
//   base     := rational | 'x' | 'exp' '(' expr ')' | 'alg' '(' intpoly (',' ['-'] rational){4} ')'
//             | '(' expr ')'
//   rational := integer ('/' posint)?
// A factor written directly after another multiplies it ("2x", "x exp(x)",
// "(x+1)(x-1)").
// intpoly is an integer polynomial in t. Every alg(...) constant of every
// input ends up in one shared number field.
ec::ExpPoly parse(const std::string& text, const Config& cfg = default_config());
std::vector<ec::ExpPoly> parse_all(const std::vector<std::string>& texts, const Config& cfg = default_config());

}  // namespace expzero::fe

#endif  // EXPZERO_FRONTEND_PARSER_HPP
