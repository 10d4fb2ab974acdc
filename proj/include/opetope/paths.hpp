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

#ifndef OPETOPE_PATHS_HPP_
#define OPETOPE_PATHS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opetope/face_complex.hpp"
#include "opetope/relations.hpp"

namespace opetope {

// Lower path d = d1, gamma(d1), d2, ..., dq = rho(c) inside delta(c), found by
// repeated lozenge completion. Throws Error(kPreconditionViolation) unless d
// is a source of c of dimension >= 1.
FacePath path_to_root(const FaceComplex& complex, std::string_view c,
                      std::string_view d);

// c0 >^{a0} d0 <^{-a0} c1 >^{a1} d1 ... cp, all c_i sources of the anchor.
struct ZigZag {
  FaceId anchor;
  std::vector<FaceId> entries;
  std::vector<Sign> signs;

  std::size_t length() const noexcept { return signs.size(); }
  bool is_trivial() const noexcept { return signs.empty(); }
  // Consecutive d_i differ.
  bool is_simple() const;
  ZigZag reversed() const;
  std::vector<FaceId> stations() const;  // c0, c1, ..., cp
  // "f1 >+ x1 <- f2"; a trivial zig-zag renders as its single face.
  std::string to_string() const;

  bool operator==(const ZigZag&) const = default;
};

// Checks the alternation, the cover signs and that every c_i is in delta(anchor).
bool is_zigzag(const FaceComplex& complex, const ZigZag& zigzag);

// The simple delta(b)-zig-zag from c to c2, read off the face tree of b:
// climb from c to the meet, then descend to c2.
ZigZag simple_zigzag(const FaceComplex& complex, std::string_view b,
                     std::string_view c, std::string_view c2);

// The 0-faces in increasing <+ order, walking along 1-faces that are not
// targets. Throws Error(kPreconditionViolation) when the walk is not forced.
std::vector<FaceId> linear_order_s0(const FaceComplex& complex);

struct SourcesPartition {
  int dim = 0;
  FaceId leftover;  // the iterated target of the greatest element
  std::map<FaceId, std::vector<FaceId>> blocks;
};

// Blocks delta(c) for c in Lambda_{k+1}. Throws kDimensionOutOfRange unless
// 0 <= k < dim, kPreconditionViolation without a greatest element and
// kInternalInvariantBroken if the blocks overlap or miss a face.
SourcesPartition sources_partition(const FaceComplex& complex, int k);

}  // namespace opetope

#endif  // OPETOPE_PATHS_HPP_
