// Copyright 2026 The opetope-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opetope/error.hpp"

#include <utility>

namespace opetope {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDimensionalFace: return "ZeroDimensionalFace";
    case ErrorCode::kDimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::kDimensionTooLow: return "DimensionTooLow";
    case ErrorCode::kDimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::kUnknownFaceReference: return "UnknownFaceReference";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kInternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorCode::kInvalidArity: return "InvalidArity";
    case ErrorCode::kInvalidTree: return "InvalidTree";
    case ErrorCode::kBudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::kInvalidComplex: return "InvalidComplex";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::kJsonShapeError: return "JsonShapeError";
    case ErrorCode::kNonAsciiName: return "NonAsciiName";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ParseError::ParseError(ErrorCode code, std::string path,
                       const std::string& message)
    : Error(code, "at \"" + path + "\": " + message), path_(std::move(path)) {}

}  // namespace opetope
