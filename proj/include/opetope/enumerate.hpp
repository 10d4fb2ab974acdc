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

#ifndef OPETOPE_ENUMERATE_HPP_
#define OPETOPE_ENUMERATE_HPP_

#include <cstdint>
#include <vector>

#include "opetope/face_complex.hpp"

namespace opetope {

inline constexpr std::uint64_t kDefaultWorkLimit = 50'000'000;

struct EnumerationBudget {
  int max_dim = 0;
  int max_faces = 1;
  // per_dim_caps[k] bounds the number of k-faces; missing entries are free.
  std::vector<int> per_dim_caps;
  std::uint64_t work_limit = kDefaultWorkLimit;
};

// Upper bound on the number of candidate extensions the enumerator examines.
std::uint64_t estimate_work(const EnumerationBudget& budget);

// Every positive-to-one poset within the budget, once per isomorphism class,
// canonically named and sorted by (size, dimension, certificate).
// Throws Error(kBudgetTooLarge) when estimate_work exceeds the work limit and
// Error(kPreconditionViolation) for a negative dimension or max_faces < 1.
std::vector<FaceComplex> enumerate_pops(const EnumerationBudget& budget);

// The positive opetopes among enumerate_pops.
std::vector<FaceComplex> enumerate_positive_opetopes(const EnumerationBudget& budget);

}  // namespace opetope

#endif  // OPETOPE_ENUMERATE_HPP_
