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

#ifndef OPETOPE_REPORT_HPP_
#define OPETOPE_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace opetope {

// Stable axiom identifiers used in reports and in the JSON report schema.
namespace axiom {
// Base positive-to-one poset / positive hypergraph axioms.
inline constexpr std::string_view kEmptyComplex = "EmptyComplex";
inline constexpr std::string_view kDuplicateFace = "DuplicateFace";
inline constexpr std::string_view kUnknownFaceReference = "UnknownFaceReference";
inline constexpr std::string_view kGradingViolation = "GradingViolation";
inline constexpr std::string_view kSignClash = "SignClash";
inline constexpr std::string_view kMissingTarget = "MissingTarget";
inline constexpr std::string_view kMultipleTargets = "MultipleTargets";
inline constexpr std::string_view kEmptySources = "EmptySources";
inline constexpr std::string_view kDuplicateSource = "DuplicateSource";
inline constexpr std::string_view kDelta0NotFunctional = "Delta0NotFunctional";
// Opetopic cardinal / positive opetope.
inline constexpr std::string_view kGlobularity = "globularity";
inline constexpr std::string_view kStrictness = "strictness";
inline constexpr std::string_view kDisjointness = "disjointness";
inline constexpr std::string_view kPencilLinearity = "pencil_linearity";
inline constexpr std::string_view kPrincipality = "principality";
// Dendritic face complex.
inline constexpr std::string_view kGreatestElement = "greatest_element";
inline constexpr std::string_view kOrientedThinness = "oriented_thinness";
inline constexpr std::string_view kAcyclicity = "acyclicity";
// Morphisms.
inline constexpr std::string_view kDimensionPreserving = "dimension_preserving";
inline constexpr std::string_view kTargetCommuting = "target_commuting";
inline constexpr std::string_view kSourceBijective = "source_bijective";
// Rooted trees.
inline constexpr std::string_view kTreeStructure = "tree_structure";
inline constexpr std::string_view kTripletUniqueness = "triplet_uniqueness";
inline constexpr std::string_view kUniquePathToRoot = "unique_path_to_root";
}  // namespace axiom

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

// Outcome of an axiom check. The verdict is derived: a report passes exactly
// when it holds no violations.
class AxiomReport {
 public:
  bool passed() const noexcept { return violations_.empty(); }

  void add(std::string_view axiom, std::vector<std::string> witness,
           std::string detail);
  void merge(const AxiomReport& other);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }
  bool has_violation(std::string_view axiom) const;
  std::vector<Violation> violations_of(std::string_view axiom) const;

  // One line per violation: "<axiom with spaces>: <detail> [w1, w2]".
  std::string to_text() const;

  bool operator==(const AxiomReport&) const = default;

 private:
  std::vector<Violation> violations_;
};

// "pencil_linearity" -> "pencil linearity".
std::string display_name(std::string_view axiom);

}  // namespace opetope

#endif  // OPETOPE_REPORT_HPP_
