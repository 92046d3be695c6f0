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

#ifndef EXPZERO_ZEROFINDER_ZEROS_HPP
#define EXPZERO_ZEROFINDER_ZEROS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "decomp/decomposition.hpp"
#include "expcore/exppoly.hpp"
#include "numberfield/algebraic.hpp"

namespace expzero::zf {

using ec::ExpPoly;
using nf::AlgebraicRoot;
using nf::FieldElement;

// Items of a normal form: the polynomial part (exponent 0) first when it is
// nonzero, then the terms in order.
struct Item {
  nf::FieldPoly coeff;
  ExpPoly exponent;
};
std::vector<Item> items(const ExpPoly& p);

struct CollapseWitness {
  enum class Kind { AllCoeffsVanish, ExponentCollision };
  Kind kind = Kind::AllCoeffsVanish;
  std::size_t i = 0;  // item indices, i < j
  std::size_t j = 0;

  friend bool operator==(const CollapseWitness&, const CollapseWitness&) = default;
};

struct Diagnostic {
  std::string kind;
  AlgebraicRoot candidate;
  std::string detail;
};

struct ZeroOptions {
  Config cfg = default_config();
  bool numeric_check = true;
  int precision_bits = 256;
};

struct ZeroReport {
  std::vector<AlgebraicRoot> zeros;
  std::vector<CollapseWitness> witnesses;  // one per zero, for the first input
  std::vector<CollapseWitness> second_witnesses;  // common_zeros only
  bool assumes_schanuel = true;
  bool complete_for_all_common_zeros = false;
  std::size_t candidates_examined = 0;
  std::vector<AlgebraicRoot> candidates;  // top level, deduplicated and sorted
  int recursion_depth = 0;
  std::vector<Diagnostic> diagnostics;
};

enum class Coprimality { Coprime, CommonFactor, Unknown };
const char* coprimality_name(Coprimality c) noexcept;

// Throws NotConstant unless c has no x.
bool const_is_zero(const ExpPoly& c);

// beta must live in p's field (or in Q).
bool is_zero_at(const ExpPoly& p, const FieldElement& beta);
bool is_zero_at(const ExpPoly& p, const AlgebraicRoot& beta, const Config& cfg = default_config());

std::optional<CollapseWitness> collapse_test(const ExpPoly& p, const FieldElement& beta);
std::optional<CollapseWitness> collapse_test(const ExpPoly& p, const AlgebraicRoot& beta,
                                             const Config& cfg = default_config());

// Rechecks a witness from scratch.
bool verify_witness(const ExpPoly& p, const AlgebraicRoot& beta, const CollapseWitness& w,
                    const Config& cfg = default_config());

// Throws IdenticallyZero for p = 0, DepthCapExceeded past cfg.max_height.
ZeroReport algebraic_zeros(const ExpPoly& p, const ZeroOptions& opt = {});

ZeroReport common_zeros(const ExpPoly& p, const ExpPoly& q, const ZeroOptions& opt = {});

// dp, dq share one refined brick set.
Coprimality coprime_check(const dc::Decomposition& dp, const dc::Decomposition& dq,
                          const Config& cfg = default_config());

}  // namespace expzero::zf

#endif  // EXPZERO_ZEROFINDER_ZEROS_HPP
