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

#ifndef EXPZERO_NUMERIC_EVAL_HPP
#define EXPZERO_NUMERIC_EVAL_HPP

#include "expcore/exppoly.hpp"
#include "numberfield/algebraic.hpp"
#include "numeric/ball.hpp"

namespace expzero::numeric {

// Enclosure of p(z) for all z in `point`, reading exp as the complex
// exponential. Total: overflow yields the whole-plane ball.
ComplexBall eval_ball(const ec::ExpPoly& p, const ComplexBall& point, Precision prec);

// Enclosure of r with radius at most 2^(-bits/2).
ComplexBall root_ball(const nf::AlgebraicRoot& r, Precision prec);

// True when some precision up to max_prec gives an enclosure of p(r)
// excluding 0. False only means no certificate was found.
bool certify_nonzero(const ec::ExpPoly& p, const nf::AlgebraicRoot& r, Precision max_prec);

// Same for a constant.
bool certify_nonzero(const ec::ExpPoly& c, Precision max_prec);

}  // namespace expzero::numeric

#endif  // EXPZERO_NUMERIC_EVAL_HPP
