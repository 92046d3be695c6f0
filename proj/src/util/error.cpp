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

#include "util/error.hpp"

namespace expzero {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BadAlgebraicConstant: return "BadAlgebraicConstant";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::BoxNotIsolating: return "BoxNotIsolating";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ExtensionFailed: return "ExtensionFailed";
    case ErrorCode::NotConstant: return "NotConstant";
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

ErrorClass error_class(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PrecisionCapExceeded:
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::DepthCapExceeded:
    case ErrorCode::ExtensionFailed:
      return ErrorClass::Resource;
    case ErrorCode::InvariantViolation:
    case ErrorCode::FieldMismatch:
      return ErrorClass::Internal;
    default:
      return ErrorClass::Input;
  }
}

}  // namespace expzero
