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

#ifndef OPETOPE_FACE_COMPLEX_HPP_
#define OPETOPE_FACE_COMPLEX_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opetope/error.hpp"
#include "opetope/report.hpp"

namespace opetope {

using FaceId = std::string;

// Dense face index. Indices follow the lexicographic order of face names, so
// iterating indices is iterating names in sorted order.
using FaceIndex = int;
inline constexpr FaceIndex kNoFace = -1;

enum class Sign : int { kMinus = -1, kPlus = 1 };

constexpr Sign operator-(Sign s) {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPlus : Sign::kMinus;
}
constexpr char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

// Format-agnostic description of a complex, as produced by the parsers and
// consumed by build_complex. Nothing here is validated yet.
struct ComplexDocument {
  struct FaceDecl {
    FaceId name;
    int dim = 0;
    bool operator==(const FaceDecl&) const = default;
  };
  struct TargetEntry {
    FaceId face;
    FaceId target;
    bool operator==(const TargetEntry&) const = default;
  };
  struct SourceEntry {
    FaceId face;
    std::vector<FaceId> sources;
    bool operator==(const SourceEntry&) const = default;
  };

  std::vector<FaceDecl> faces;
  std::vector<TargetEntry> targets;
  std::vector<SourceEntry> sources;
  std::optional<std::string> name;
  std::optional<std::string> description;

  bool operator==(const ComplexDocument&) const = default;
};

// A finite graded set of named faces with one target and a nonempty set of
// sources on every face of positive dimension. Instances only come out of
// build_complex, so every value satisfies the positive-to-one poset axioms.
class FaceComplex {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  // Largest face dimension.
  int dimension() const noexcept { return static_cast<int>(strata_.size()) - 1; }

  const std::vector<FaceId>& faces() const noexcept { return names_; }
  bool contains(std::string_view name) const { return find(name).has_value(); }
  int dim(std::string_view name) const { return dims_[index_of(name)]; }
  // Faces of dimension k in name order; empty outside [0, dimension()].
  std::vector<FaceId> stratum(int k) const;

  std::optional<FaceIndex> find(std::string_view name) const;
  // Throws Error(kUnknownFaceReference) for absent names.
  FaceIndex index_of(std::string_view name) const;
  const FaceId& name(FaceIndex i) const { return names_[i]; }
  int dim_at(FaceIndex i) const { return dims_[i]; }
  // kNoFace on dimension-0 faces.
  FaceIndex target_at(FaceIndex i) const { return targets_[i]; }
  const std::vector<FaceIndex>& sources_at(FaceIndex i) const {
    return sources_[i];
  }
  // Faces x with i in delta(x).
  const std::vector<FaceIndex>& source_of(FaceIndex i) const {
    return source_of_[i];
  }
  // Faces x with gamma(x) == i.
  const std::vector<FaceIndex>& target_of(FaceIndex i) const {
    return target_of_[i];
  }
  const std::vector<FaceIndex>& stratum_at(int k) const;
  // Sign of the cover y < x, if y is covered by x.
  std::optional<Sign> cover_sign(FaceIndex y, FaceIndex x) const;
  bool is_source(FaceIndex y, FaceIndex x) const;

  // Same names, dimensions, targets and sources.
  bool operator==(const FaceComplex&) const = default;

 private:
  friend class ComplexBuilder;
  FaceComplex() = default;

  std::vector<FaceId> names_;
  std::vector<int> dims_;
  std::vector<FaceIndex> targets_;
  std::vector<std::vector<FaceIndex>> sources_;
  std::vector<std::vector<FaceIndex>> source_of_;
  std::vector<std::vector<FaceIndex>> target_of_;
  std::vector<std::vector<FaceIndex>> strata_;
};

// Either a validated complex or the report of every failed base axiom.
class BuildResult {
 public:
  explicit BuildResult(FaceComplex complex) : value_(std::move(complex)) {}
  explicit BuildResult(AxiomReport report) : value_(std::move(report)) {}

  bool ok() const noexcept { return value_.index() == 0; }
  // Throws ValidationError when the build failed.
  const FaceComplex& complex() const;
  // Empty (passing) report on success.
  const AxiomReport& report() const;

 private:
  std::variant<FaceComplex, AxiomReport> value_;
};

// Thrown by BuildResult::complex() and by helpers that require a valid input.
class ValidationError : public Error {
 public:
  explicit ValidationError(AxiomReport report);
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

BuildResult build_complex(const ComplexDocument& document);
// Lists every face, target and source of `complex` (faces in name order).
ComplexDocument to_document(const FaceComplex& complex);

// delta(x) and gamma(x). Both throw Error(kZeroDimensionalFace) on points.
std::vector<FaceId> delta(const FaceComplex& complex, std::string_view face);
FaceId gamma(const FaceComplex& complex, std::string_view face);
// gamma applied dim(x) - k times. Throws Error(kDimensionTooHigh) if k > dim(x).
FaceId iterated_target(const FaceComplex& complex, std::string_view face, int k);
FaceIndex iterated_target_at(const FaceComplex& complex, FaceIndex face, int k);

// Positive hypergraph presentation: strata S_k, gamma_k : S_{k+1} -> S_k and
// delta_k : S_{k+1} -> P(S_k), each table indexed by k.
struct HypergraphView {
  std::vector<std::vector<FaceId>> strata;
  std::vector<std::map<FaceId, FaceId>> gamma;
  std::vector<std::map<FaceId, std::vector<FaceId>>> delta;

  bool operator==(const HypergraphView&) const = default;
};

HypergraphView to_hypergraph_view(const FaceComplex& complex);
BuildResult from_hypergraph_view(const HypergraphView& view);

// A face map between two complexes. The complexes are not owned and must
// outlive the morphism.
struct Morphism {
  const FaceComplex* source = nullptr;
  const FaceComplex* target = nullptr;
  std::map<FaceId, FaceId> map;
};

Morphism identity_morphism(const FaceComplex& complex);
// second after first; both must be total.
Morphism compose(const Morphism& first, const Morphism& second);
// Checks dimension preservation, target commutation and bijectivity of every
// restriction to delta(x). Throws Error(kUnknownFaceReference) when the map
// mentions absent faces and Error(kPreconditionViolation) when it is partial.
AxiomReport validate_morphism(const Morphism& morphism);

}  // namespace opetope

#endif  // OPETOPE_FACE_COMPLEX_HPP_
