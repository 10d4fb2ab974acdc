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

#ifndef OPETOPE_CANONICAL_HPP_
#define OPETOPE_CANONICAL_HPP_

#include <map>
#include <optional>
#include <vector>

#include "opetope/face_complex.hpp"

namespace opetope {

namespace detail {

// Name-free complex: dims, targets (-1 on points) and sorted sources.
struct RawComplex {
  std::vector<int> dims;
  std::vector<int> target;
  std::vector<std::vector<int>> sources;

  std::size_t size() const noexcept { return dims.size(); }
};

RawComplex to_raw(const FaceComplex& complex);

}  // namespace detail

struct CanonicalForm {
  // position[i] is the canonical position of face index i.
  std::vector<int> position;
  // Per position: dim, target position (-1 on points), source count, sorted
  // source positions.
  std::vector<int> certificate;
};

CanonicalForm canonical_form(const FaceComplex& complex);
CanonicalForm canonical_form(const detail::RawComplex& complex);

// A dimension-preserving bijection commuting with targets and sources, or
// nullopt. The witness is the one pairing equal canonical positions.
std::optional<std::map<FaceId, FaceId>> are_isomorphic(const FaceComplex& a,
                                                       const FaceComplex& b);

// Faces renamed by canonical position: x0.. for points, f1.. for 1-faces,
// a1.. for 2-faces, A1.. for 3-faces and d<k>_1.. above.
FaceComplex canonical_relabel(const FaceComplex& complex);
FaceComplex from_raw(const detail::RawComplex& complex);

}  // namespace opetope

#endif  // OPETOPE_CANONICAL_HPP_
