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

#include "numeric/fieldball.hpp"

namespace expzero::numeric {

ComplexBall generator_ball(const nf::FieldPtr& field, Precision prec) {
  if (field->is_rational()) return ComplexBall::exact(0);
  return ComplexBall::from_rectangle(field->generator_box(nf::pow2(-prec.bits)), prec);
}

ComplexBall element_ball(const nf::FieldElement& a, Precision prec) {
  const auto& c = a.coords();
  if (a.is_rational()) return ComplexBall::from_rational(c[0], 0, prec);
  const ComplexBall theta = generator_ball(a.field(), prec);
  ComplexBall acc = ComplexBall::exact(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = ball_mul(acc, theta, prec);
    acc = ball_add(acc, ComplexBall::from_rational(c[i], 0, prec), prec);
  }
  return acc;
}

ComplexBall poly_ball(const nf::FieldPoly& p, const ComplexBall& at, Precision prec) {
  ComplexBall acc = ComplexBall::exact(0);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = ball_mul(acc, at, prec);
    acc = ball_add(acc, element_ball(p.coeffs()[i], prec), prec);
  }
  return acc;
}

}  // namespace expzero::numeric
