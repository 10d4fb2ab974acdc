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

#ifndef OPETOPE_ZPO_AXIOMS_HPP_
#define OPETOPE_ZPO_AXIOMS_HPP_

#include "opetope/face_complex.hpp"
#include "opetope/report.hpp"

namespace opetope {

// gamma gamma(x) = gamma delta(x) \ delta delta(x) and
// delta gamma(x) = delta delta(x) \ gamma delta(x) for every x of dim >= 2.
AxiomReport check_globularity(const FaceComplex& complex);

// <+ is irreflexive on every stratum and total on S_0.
AxiomReport check_strictness(const FaceComplex& complex);

// For k > 0 no two faces of S_k are comparable under both <- and <+.
AxiomReport check_disjointness(const FaceComplex& complex);

// For k > 0 and y in S_{k-1}, the faces targeting y and the faces having y as
// a source are each totally ordered by <+.
AxiomReport check_pencil_linearity(const FaceComplex& complex);

// Exactly one face of each dimension k <= dim is a source of no (k+1)-face.
AxiomReport check_principality(const FaceComplex& complex);

// Globularity, strictness, disjointness and pencil linearity.
AxiomReport is_opetopic_cardinal(const FaceComplex& complex);
// Opetopic cardinal plus principality.
AxiomReport is_positive_opetope(const FaceComplex& complex);

}  // namespace opetope

#endif  // OPETOPE_ZPO_AXIOMS_HPP_
