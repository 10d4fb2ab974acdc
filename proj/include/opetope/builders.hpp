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

#ifndef OPETOPE_BUILDERS_HPP_
#define OPETOPE_BUILDERS_HPP_

#include "opetope/face_complex.hpp"
#include "opetope/rooted_tree.hpp"

namespace opetope {

// A single point x.
FaceComplex point();
// x --f--> y.
FaceComplex arrow();
// Points x0..xn, arrows fi: x(i-1) -> xi, h: x0 -> xn and the 2-face alpha
// with sources f1..fn and target h. Throws Error(kInvalidArity) for n < 1.
FaceComplex two_cell(int n);
// The 3-cell A: alpha => beta between two parallel binary 2-cells
// alpha, beta: f1, f2 => h.
FaceComplex three_one();
// n isolated points x0..x(n-1); n >= 1.
FaceComplex discrete(int n);

// The 3-cell whose source 2-faces are the nodes of the tree, each with one
// source 1-face per arity slot (in the listed order), glued along the
// triplets. Its target 2-face "alpha" has one source per leaf and target "h";
// the 3-face is "A". Slot 1-faces take the slot name when it is unique in
// the tree and "<node>_<slot>" otherwise; points are x0..xm.
// Throws Error(kInvalidTree) for an invalid tree, an empty arity or a name
// clash with the generated faces.
FaceComplex three_cell_from_tree(const RootedTree& tree);

// Four nodes a1..a4 with slots b1..b8, root a1 and leaves b1..b5.
RootedTree example_rooted_tree();
// Nodes alpha1..alpha3 over f1..f7: alpha3 (f7, f5), alpha2 (f1, f6),
// alpha1 (f2, f3, f4), with alpha2 on f7 and alpha1 on f6.
RootedTree stacked_tree();
// alpha3 (f6, f7) with alpha1 (f1, f2) on f6 and alpha2 (f3, f4, f5) on f7.
RootedTree forked_tree();

}  // namespace opetope

#endif  // OPETOPE_BUILDERS_HPP_
