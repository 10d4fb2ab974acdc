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

#ifndef OPETOPE_ERROR_HPP_
#define OPETOPE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opetope {

enum class ErrorCode {
  kZeroDimensionalFace,
  kDimensionTooHigh,
  kDimensionTooLow,
  kDimensionOutOfRange,
  kUnknownFaceReference,
  kPreconditionViolation,
  kInternalInvariantBroken,
  kInvalidArity,
  kInvalidTree,
  kBudgetTooLarge,
  kInvalidComplex,
  kSyntaxError,
  kDuplicateDeclaration,
  kJsonShapeError,
  kNonAsciiName,
};

std::string_view to_string(ErrorCode code);

// Base exception for every operation-level failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure. DSL errors carry a 1-based line and column; JSON errors
// carry a dotted path such as "target.f".
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message);
  ParseError(ErrorCode code, std::string path, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
  std::string path_;
};

}  // namespace opetope

#endif  // OPETOPE_ERROR_HPP_
