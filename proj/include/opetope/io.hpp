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

#ifndef OPETOPE_IO_HPP_
#define OPETOPE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "opetope/face_complex.hpp"

namespace opetope {

struct Metadata {
  std::optional<std::string> name;
  std::optional<std::string> description;
};

Metadata metadata_of(const ComplexDocument& document);

// Line grammar:
//   # comment            (# name: ... and # description: ... set metadata)
//   face <id> : <dim>
//   tgt <id> -> <id>
//   src <id> <- <id> [, <id>]*
// with ids [A-Za-z_][A-Za-z0-9_']*. Throws ParseError with line and column:
// kSyntaxError for malformed lines or a target/sources line on a point,
// kDuplicateDeclaration for a repeated face, tgt or src subject.
ComplexDocument parse_dsl(std::string_view text);

// Faces by (dim, name), then tgt and src lines in the same order. Throws
// Error(kNonAsciiName) when a name is not a DSL identifier.
std::string emit_dsl(const FaceComplex& complex, const Metadata& metadata = {});

// {"faces": {id: dim}, "target": {id: id}, "sources": {id: [id, ...]}} plus
// optional "name" and "description". Throws ParseError with a JSON path:
// kJsonShapeError for shape problems, kSyntaxError (with line and column)
// for malformed JSON.
ComplexDocument parse_json(std::string_view text);

// Compact, keys sorted, source arrays sorted; no trailing newline.
std::string emit_json(const FaceComplex& complex, const Metadata& metadata = {});

// Hasse diagram: nodes "name:dim" ranked by dimension, an edge y -> x per
// cover with sign="-" (solid) or sign="+" (dashed).
std::string emit_dot_hasse(const FaceComplex& complex);

// Face tree of x: nodes delta(x), edges child -> parent labelled by the slot,
// the root drawn bold. Errors as face_tree.
std::string emit_dot_tree(const FaceComplex& complex, std::string_view face);

// Whether a name matches the DSL identifier syntax.
bool is_dsl_identifier(std::string_view name);

}  // namespace opetope

#endif  // OPETOPE_IO_HPP_
