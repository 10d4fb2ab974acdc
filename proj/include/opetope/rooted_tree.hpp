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

#ifndef OPETOPE_ROOTED_TREE_HPP_
#define OPETOPE_ROOTED_TREE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opetope/report.hpp"

namespace opetope {

// `parent` -[slot]-> `child`: the child is plugged into slot `slot` of the
// parent, so descending paths run from children towards the root.
struct Triplet {
  std::string parent;
  std::string slot;
  std::string child;

  bool operator==(const Triplet&) const = default;
};

// Finite rooted tree whose nodes carry a finite set of arity slots. Slot order
// is kept as given and serves as the planar order where one is needed.
struct RootedTree {
  struct Node {
    std::string name;
    std::vector<std::string> arity;

    bool operator==(const Node&) const = default;
  };

  std::vector<Node> nodes;
  std::vector<Triplet> triplets;
  std::string root;

  const Node* find(const std::string& name) const;
  std::optional<Triplet> triplet_at(const std::string& node,
                                    const std::string& slot) const;
  // Parent of a node; nullopt for the root (and for nodes with no triplet).
  std::optional<std::string> parent_of(const std::string& node) const;
  // (node, slot) pairs with no triplet, in node order then slot order.
  std::vector<std::pair<std::string, std::string>> leaves() const;
  // Leaves in planar order: depth-first from the root, slots left to right.
  std::vector<std::pair<std::string, std::string>> planar_leaves() const;
  // Descending path node -> ... -> root. Requires a valid tree.
  std::vector<std::string> path_to_root(const std::string& node) const;

  bool operator==(const RootedTree&) const = default;
};

// Passes iff names are consistent, each (node, slot) carries at most one
// triplet and every node has exactly one descending path to the root.
AxiomReport validate_rooted_tree(const RootedTree& tree);

}  // namespace opetope

#endif  // OPETOPE_ROOTED_TREE_HPP_
