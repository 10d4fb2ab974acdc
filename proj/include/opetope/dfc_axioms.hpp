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

#ifndef OPETOPE_DFC_AXIOMS_HPP_
#define OPETOPE_DFC_AXIOMS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "opetope/face_complex.hpp"
#include "opetope/report.hpp"
#include "opetope/rooted_tree.hpp"

namespace opetope {

struct GreatestElement {
  std::optional<FaceId> face;
  // On failure: the top-dimensional faces when there are several, otherwise
  // the unique top face followed by the first face not below it.
  std::vector<FaceId> witness;
};

GreatestElement greatest_element(const FaceComplex& complex);
// kNoFace when there is none.
FaceIndex greatest_element_at(const FaceComplex& complex);

// bottom < left < top and bottom < right < top, with the four cover signs:
// alpha = sign(left < top), beta = sign(bottom < left), and the primed signs
// for the right-hand side.
struct Lozenge {
  FaceId top;
  FaceId left;
  FaceId right;
  FaceId bottom;
  Sign alpha = Sign::kMinus;
  Sign beta = Sign::kMinus;
  Sign alpha_prime = Sign::kMinus;
  Sign beta_prime = Sign::kMinus;

  // alpha * beta == -(alpha' * beta').
  bool sign_rule_holds() const { return alpha * beta == -(alpha_prime * beta_prime); }
  bool operator==(const Lozenge&) const = default;
};

enum class CompletionStatus {
  kCompleted,
  kNoCompletion,
  kAmbiguousCompletion,
  kSignRuleViolation,
};

struct LozengeCompletion {
  CompletionStatus status = CompletionStatus::kNoCompletion;
  // Every y' != y with z < y' < x, in name order.
  std::vector<FaceId> candidates;
  // Present when there is exactly one candidate.
  std::optional<Lozenge> lozenge;

  bool ok() const noexcept { return status == CompletionStatus::kCompleted; }
};

// Completes the half lozenge z < y < x. Throws Error(kPreconditionViolation)
// unless z is covered by y and y by x.
LozengeCompletion complete_half_lozenge(const FaceComplex& complex,
                                        std::string_view z, std::string_view y,
                                        std::string_view x);

AxiomReport check_greatest_element(const FaceComplex& complex);
AxiomReport check_oriented_thinness(const FaceComplex& complex);
// Singleton delta on 1-faces, nonempty delta everywhere, and for dim(x) >= 2
// no directed cycle of y' -> y (gamma(y') in delta(y)) inside delta(x).
AxiomReport check_acyclicity(const FaceComplex& complex);
// Greatest element, oriented thinness and acyclicity.
AxiomReport is_dfc(const FaceComplex& complex);

// Rooted tree on delta(x): arity(y) = delta(y) (empty on points), a triplet
// y -[z]-> y' whenever z in delta(y) and gamma(y') = z, and the root rho(x)
// with gamma(rho(x)) = gamma(gamma(x)). Expects a dendritic face complex;
// a tree that fails validation raises Error(kInternalInvariantBroken).
RootedTree face_tree(const FaceComplex& complex, std::string_view face);

}  // namespace opetope

#endif  // OPETOPE_DFC_AXIOMS_HPP_
