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

#ifndef OPETOPE_RELATIONS_HPP_
#define OPETOPE_RELATIONS_HPP_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "opetope/face_complex.hpp"

namespace opetope {

// One-step relation on a stratum S_k.
struct StepRelation {
  int dimension = 0;
  Sign sign = Sign::kMinus;
  // Faces of S_k in name order.
  std::vector<FaceId> domain;
  // Sorted and duplicate-free.
  std::vector<std::pair<FaceId, FaceId>> pairs;

  bool contains(std::string_view a, std::string_view b) const;
};

// Transitive closure of a StepRelation with O(1) membership queries.
class ClosedRelation {
 public:
  ClosedRelation() = default;

  int dimension() const noexcept { return dimension_; }
  Sign sign() const noexcept { return sign_; }
  // Domain plus anything mentioned by a pair, in name order.
  const std::vector<FaceId>& elements() const noexcept { return elements_; }

  // a < b. Unknown names are related to nothing.
  bool less(std::string_view a, std::string_view b) const;
  // a = b or a < b.
  bool leq(std::string_view a, std::string_view b) const;
  // a < b or b < a.
  bool comparable(std::string_view a, std::string_view b) const;

  // Positional variants over elements().
  bool less_at(std::size_t a, std::size_t b) const {
    return matrix_[a * elements_.size() + b] != 0;
  }
  bool comparable_at(std::size_t a, std::size_t b) const {
    return less_at(a, b) || less_at(b, a);
  }

  std::vector<std::pair<FaceId, FaceId>> pairs() const;
  bool is_irreflexive() const;

 private:
  friend ClosedRelation closure(const StepRelation& relation);
  std::optional<std::size_t> position(std::string_view name) const;

  int dimension_ = 0;
  Sign sign_ = Sign::kMinus;
  std::vector<FaceId> elements_;
  std::vector<char> matrix_;
};

// x <|- x' iff gamma(x) in delta(x'); empty on S_0.
StepRelation step_minus(const FaceComplex& complex, int k);
// x <|+ x' iff some w in S_{k+1} has x in delta(w) and gamma(w) = x'.
StepRelation step_plus(const FaceComplex& complex, int k);
ClosedRelation closure(const StepRelation& relation);

inline ClosedRelation order_minus(const FaceComplex& complex, int k) {
  return closure(step_minus(complex, k));
}
inline ClosedRelation order_plus(const FaceComplex& complex, int k) {
  return closure(step_plus(complex, k));
}

// Lambda_k = S_k minus gamma(S_{k+1}); Gamma_k = gamma(S_{k+1}).
// Both throw Error(kDimensionOutOfRange) unless 0 <= k <= dimension().
std::vector<FaceId> lambda_set(const FaceComplex& complex, int k);
std::vector<FaceId> gamma_set(const FaceComplex& complex, int k);

// delta(delta(x)) intersected with gamma(delta(x)); dim(x) >= 2, otherwise
// Error(kDimensionTooLow).
std::vector<FaceId> iota(const FaceComplex& complex, std::string_view face);

enum class PathKind { kLower, kUpper };

// Alternating sequence of k-faces and (k-1)-faces.
//   lower: x0 >+ y0 <- x1 >+ y1 <- ... <- xp   (gamma(x_i) = y_i in delta(x_{i+1}))
//   upper: y0 <- x1 >+ y1 <- ... <- xp >+ yp   (y_{i-1} in delta(x_i), gamma(x_i) = y_i)
struct FacePath {
  PathKind kind = PathKind::kLower;
  std::vector<FaceId> faces;

  // Entries at even positions: the x_i of a lower path, the y_i of an upper one.
  std::vector<FaceId> primary() const;
  bool operator==(const FacePath&) const = default;
};

// Both throw Error(kUnknownFaceReference) on unknown names. A single face is a
// trivial path; an empty sequence is not a path.
bool is_lower_path(const FaceComplex& complex, std::span<const FaceId> sequence);
bool is_upper_path(const FaceComplex& complex, std::span<const FaceId> sequence);

}  // namespace opetope

#endif  // OPETOPE_RELATIONS_HPP_
