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

#include "opetope/dfc_axioms.hpp"
#include "opetope/io.hpp"

namespace opetope {
namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot_hasse(const FaceComplex& complex) {
  std::string out = "digraph hasse {\n";
  for (int k = 0; k <= complex.dimension(); ++k) {
    out += "  { rank=same;";
    for (FaceIndex x : complex.stratum_at(k)) {
      out += " " + quoted(complex.name(x)) + " [label=" +
             quoted(complex.name(x) + ":" + std::to_string(k)) + "];";
    }
    out += " }\n";
  }
  for (int k = 1; k <= complex.dimension(); ++k) {
    for (FaceIndex x : complex.stratum_at(k)) {
      for (FaceIndex y : complex.sources_at(x)) {
        out += "  " + quoted(complex.name(y)) + " -> " + quoted(complex.name(x)) +
               " [sign=\"-\", style=solid];\n";
      }
      out += "  " + quoted(complex.name(complex.target_at(x))) + " -> " +
             quoted(complex.name(x)) + " [sign=\"+\", style=dashed];\n";
    }
  }
  return out + "}\n";
}

std::string emit_dot_tree(const FaceComplex& complex, std::string_view face) {
  const RootedTree tree = face_tree(complex, face);
  std::string out = "digraph tree {\n";
  for (const auto& node : tree.nodes) {
    out += "  " + quoted(node.name);
    if (node.name == tree.root) out += " [style=bold]";
    out += ";\n";
  }
  for (const Triplet& t : tree.triplets) {
    out += "  " + quoted(t.child) + " -> " + quoted(t.parent) +
           " [label=" + quoted(t.slot) + "];\n";
  }
  return out + "}\n";
}

}  // namespace opetope
