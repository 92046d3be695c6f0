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

#ifndef EXPZERO_UTIL_CONFIG_HPP
#define EXPZERO_UTIL_CONFIG_HPP

namespace expzero {

// Resource caps. Every loop that could run unbounded on adversarial input is
// bounded by one of these and fails with a resource-class error past it.
struct Config {
  // Rectangle refinement never goes finer than 2^-precision_cap_bits.
  int precision_cap_bits = 1 << 14;
  // Primitive element search tries k in [-bound, bound].
  int primitive_search_bound = 20;
  // Input minimal polynomials above this degree are rejected.
  int irreducibility_degree_cap = 12;
  // Integer polynomials above this degree are not factored.
  int factor_degree_cap = 96;
  // coprime_check answers "unknown" above this total degree.
  int coprime_degree_cap = 16;
  // Recursion depth of zero enumeration.
  int max_height = 16;
};

inline const Config& default_config() {
  static const Config cfg{};
  return cfg;
}

}  // namespace expzero

#endif  // EXPZERO_UTIL_CONFIG_HPP
