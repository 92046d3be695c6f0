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

#ifndef EXPZERO_UTIL_ERROR_HPP
#define EXPZERO_UTIL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expzero {

enum class ErrorCode {
  SyntaxError,
  BadAlgebraicConstant,
  NotIrreducible,
  NotSquareFree,
  BoxNotIsolating,
  DivisionByZero,
  ZeroPolynomial,
  FieldMismatch,
  ExtensionFailed,
  NotConstant,
  IdenticallyZero,
  PrecisionCapExceeded,
  DegreeCapExceeded,
  DepthCapExceeded,
  InvariantViolation,
};

// Coarse classification used for process exit codes.
enum class ErrorClass { Input = 1, Resource = 2, Internal = 3 };

const char* error_code_name(ErrorCode code) noexcept;
ErrorClass error_class(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorClass error_class() const noexcept { return expzero::error_class(code_); }
  // Byte offset into the source text for SyntaxError, npos otherwise.
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace expzero

#endif  // EXPZERO_UTIL_ERROR_HPP
