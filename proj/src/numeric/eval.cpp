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

#include "numeric/eval.hpp"

#include <algorithm>

#include "numeric/fieldball.hpp"

namespace expzero::numeric {

ComplexBall eval_ball(const ec::ExpPoly& p, const ComplexBall& point, Precision prec) {
  ComplexBall acc = poly_ball(p.poly_part(), point, prec);
  for (const auto& t : p.terms()) {
    const ComplexBall e = ball_exp(eval_ball(*t.exponent, point, prec), prec);
    acc = ball_add(acc, ball_mul(poly_ball(t.coeff, point, prec), e, prec), prec);
    if (acc.is_whole_plane()) return acc;
  }
  return acc;
}

ComplexBall root_ball(const nf::AlgebraicRoot& r, Precision prec) {
  const auto fine = nf::refine(r, nf::pow2(-(prec.bits / 2 + 1)));
  return ComplexBall::from_rectangle(fine.box, Precision{prec.bits + 8});
}

namespace {

template <typename F>
bool any_precision(Precision max_prec, F excludes) {
  for (int bits = std::min(64, max_prec.bits);; bits *= 2) {
    if (bits > max_prec.bits) bits = max_prec.bits;
    if (excludes(Precision{bits})) return true;
    if (bits >= max_prec.bits) return false;
  }
}

}  // namespace

bool certify_nonzero(const ec::ExpPoly& p, const nf::AlgebraicRoot& r, Precision max_prec) {
  return any_precision(max_prec, [&](Precision prec) {
    return eval_ball(p, root_ball(r, prec), prec).excludes_zero();
  });
}

bool certify_nonzero(const ec::ExpPoly& c, Precision max_prec) {
  return any_precision(max_prec, [&](Precision prec) {
    return eval_ball(c, ComplexBall::exact(0), prec).excludes_zero();
  });
}

}  // namespace expzero::numeric
