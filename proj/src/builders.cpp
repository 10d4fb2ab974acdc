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

#include "opetope/builders.hpp"

#include <map>
#include <set>
#include <string>

#include "opetope/zpo_axioms.hpp"

namespace opetope {
namespace {

class DocumentWriter {
 public:
  void face(const std::string& name, int dim) { doc_.faces.push_back({name, dim}); }
  void cell(const std::string& name, int dim, std::vector<FaceId> sources,
            const std::string& target) {
    face(name, dim);
    doc_.targets.push_back({name, target});
    doc_.sources.push_back({name, std::move(sources)});
  }
  FaceComplex build() const { return build_complex(doc_).complex(); }

 private:
  ComplexDocument doc_;
};

std::string point_name(std::size_t i) { return "x" + std::to_string(i); }

}  // namespace

FaceComplex point() {
  DocumentWriter w;
  w.face("x", 0);
  return w.build();
}

FaceComplex arrow() {
  DocumentWriter w;
  w.face("x", 0);
  w.face("y", 0);
  w.cell("f", 1, {"x"}, "y");
  return w.build();
}

FaceComplex two_cell(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArity,
                "a 2-cell needs at least one source, got " + std::to_string(n));
  }
  DocumentWriter w;
  std::vector<FaceId> arrows;
  for (int i = 0; i <= n; ++i) w.face(point_name(i), 0);
  for (int i = 1; i <= n; ++i) {
    arrows.push_back("f" + std::to_string(i));
    w.cell(arrows.back(), 1, {point_name(i - 1)}, point_name(i));
  }
  w.cell("h", 1, {"x0"}, point_name(n));
  w.cell("alpha", 2, arrows, "h");
  return w.build();
}

FaceComplex three_one() {
  DocumentWriter w;
  for (int i = 0; i <= 2; ++i) w.face(point_name(i), 0);
  w.cell("f1", 1, {"x0"}, "x1");
  w.cell("f2", 1, {"x1"}, "x2");
  w.cell("h", 1, {"x0"}, "x2");
  w.cell("alpha", 2, {"f1", "f2"}, "h");
  w.cell("beta", 2, {"f1", "f2"}, "h");
  w.cell("A", 3, {"alpha"}, "beta");
  return w.build();
}

FaceComplex discrete(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArity, "need at least one point");
  }
  DocumentWriter w;
  for (int i = 0; i < n; ++i) w.face(point_name(i), 0);
  return w.build();
}

FaceComplex three_cell_from_tree(const RootedTree& tree) {
  const AxiomReport report = validate_rooted_tree(tree);
  if (!report.passed()) {
    throw Error(ErrorCode::kInvalidTree, report.to_text());
  }
  std::map<std::string, int> slot_uses;
  for (const auto& node : tree.nodes) {
    if (node.arity.empty()) {
      throw Error(ErrorCode::kInvalidTree, "node " + node.name + " has no slots");
    }
    for (const auto& slot : node.arity) ++slot_uses[slot];
  }
  auto slot_face = [&](const RootedTree::Node& node, const std::string& slot) {
    return slot_uses[slot] == 1 ? slot : node.name + "_" + slot;
  };

  // Planar walk: every slot face spans the consecutive points of the leaves
  // above it.
  struct Span {
    std::size_t from = 0;
    std::size_t to = 0;
  };
  std::map<std::string, Span> slot_span;  // keyed by slot face name
  std::vector<FaceId> leaf_faces;
  auto walk = [&](auto&& self, const RootedTree::Node& node) -> Span {
    Span whole{leaf_faces.size(), leaf_faces.size()};
    for (const auto& slot : node.arity) {
      const std::string face = slot_face(node, slot);
      Span span;
      if (auto t = tree.triplet_at(node.name, slot)) {
        span = self(self, *tree.find(t->child));
      } else {
        span = {leaf_faces.size(), leaf_faces.size() + 1};
        leaf_faces.push_back(face);
      }
      slot_span[face] = span;
    }
    whole.to = leaf_faces.size();
    return whole;
  };
  walk(walk, *tree.find(tree.root));
  const std::size_t m = leaf_faces.size();

  std::set<std::string> generated{"h", "alpha", "A"};
  for (std::size_t i = 0; i <= m; ++i) generated.insert(point_name(i));
  std::set<std::string> taken;
  auto claim = [&](const std::string& name) {
    if (generated.contains(name) || !taken.insert(name).second) {
      throw Error(ErrorCode::kInvalidTree, "face name " + name + " is used twice");
    }
  };

  DocumentWriter w;
  for (std::size_t i = 0; i <= m; ++i) w.face(point_name(i), 0);
  for (const auto& [face, span] : slot_span) {
    claim(face);
    w.cell(face, 1, {point_name(span.from)}, point_name(span.to));
  }
  w.cell("h", 1, {"x0"}, point_name(m));
  std::vector<FaceId> node_faces;
  for (const auto& node : tree.nodes) {
    claim(node.name);
    std::vector<FaceId> sources;
    for (const auto& slot : node.arity) sources.push_back(slot_face(node, slot));
    std::string target = "h";
    for (const Triplet& t : tree.triplets) {
      if (t.child == node.name) target = slot_face(*tree.find(t.parent), t.slot);
    }
    w.cell(node.name, 2, std::move(sources), target);
    node_faces.push_back(node.name);
  }
  w.cell("alpha", 2, leaf_faces, "h");
  w.cell("A", 3, node_faces, "alpha");
  FaceComplex out = w.build();
  const AxiomReport check = is_positive_opetope(out);
  if (!check.passed()) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                "tree did not produce a positive opetope:\n" + check.to_text());
  }
  return out;
}

RootedTree example_rooted_tree() {
  RootedTree t;
  t.nodes = {{"a1", {"b6", "b7"}},
             {"a2", {"b1", "b8"}},
             {"a3", {"b2", "b3"}},
             {"a4", {"b4", "b5"}}};
  t.triplets = {{"a1", "b6", "a2"}, {"a1", "b7", "a4"}, {"a2", "b8", "a3"}};
  t.root = "a1";
  return t;
}

RootedTree stacked_tree() {
  RootedTree t;
  t.nodes = {{"alpha1", {"f2", "f3", "f4"}},
             {"alpha2", {"f1", "f6"}},
             {"alpha3", {"f7", "f5"}}};
  t.triplets = {{"alpha3", "f7", "alpha2"}, {"alpha2", "f6", "alpha1"}};
  t.root = "alpha3";
  return t;
}

RootedTree forked_tree() {
  RootedTree t;
  t.nodes = {{"alpha1", {"f1", "f2"}},
             {"alpha2", {"f3", "f4", "f5"}},
             {"alpha3", {"f6", "f7"}}};
  t.triplets = {{"alpha3", "f6", "alpha1"}, {"alpha3", "f7", "alpha2"}};
  t.root = "alpha3";
  return t;
}

}  // namespace opetope
