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

#ifndef EXPZERO_NUMERIC_FIELDBALL_HPP
#define EXPZERO_NUMERIC_FIELDBALL_HPP

#include "numberfield/field.hpp"
#include "numeric/ball.hpp"

namespace expzero::numeric {

// Enclosure of the generator of `field` with radius about 2^-bits.
ComplexBall generator_ball(const nf::FieldPtr& field, Precision prec);

ComplexBall element_ball(const nf::FieldElement& a, Precision prec);

ComplexBall poly_ball(const nf::FieldPoly& p, const ComplexBall& at, Precision prec);

}  // namespace expzero::numeric

#endif  // EXPZERO_NUMERIC_FIELDBALL_HPP
