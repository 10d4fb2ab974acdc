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

#include "opetope/rooted_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opetope/error.hpp"

namespace opetope {

const RootedTree::Node* RootedTree::find(const std::string& name) const {
  for (const Node& node : nodes) {
    if (node.name == name) return &node;
  }
  return nullptr;
}

std::optional<Triplet> RootedTree::triplet_at(const std::string& node,
                                              const std::string& slot) const {
  for (const Triplet& t : triplets) {
    if (t.parent == node && t.slot == slot) return t;
  }
  return std::nullopt;
}

std::optional<std::string> RootedTree::parent_of(const std::string& node) const {
  if (node == root) return std::nullopt;
  for (const Triplet& t : triplets) {
    if (t.child == node) return t.parent;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> RootedTree::leaves() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Node& node : nodes) {
    for (const std::string& slot : node.arity) {
      if (!triplet_at(node.name, slot)) out.emplace_back(node.name, slot);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> RootedTree::planar_leaves() const {
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> visited;
  auto visit = [&](auto&& self, const std::string& name) -> void {
    const Node* node = find(name);
    if (node == nullptr || !visited.insert(name).second) return;
    for (const std::string& slot : node->arity) {
      if (auto t = triplet_at(name, slot)) {
        self(self, t->child);
      } else {
        out.emplace_back(name, slot);
      }
    }
  };
  visit(visit, root);
  return out;
}

std::vector<std::string> RootedTree::path_to_root(const std::string& node) const {
  std::vector<std::string> path{node};
  std::optional<std::string> parent = parent_of(node);
  while (parent) {
    if (path.size() > nodes.size()) {
      throw Error(ErrorCode::kInvalidTree, "cycle above node " + node);
    }
    path.push_back(*parent);
    parent = parent_of(*parent);
  }
  if (path.back() != root) {
    throw Error(ErrorCode::kInvalidTree, "node " + node + " does not reach the root");
  }
  return path;
}

AxiomReport validate_rooted_tree(const RootedTree& tree) {
  AxiomReport report;
  std::map<std::string, const RootedTree::Node*> by_name;
  for (const auto& node : tree.nodes) {
    if (!by_name.emplace(node.name, &node).second) {
      report.add(axiom::kTreeStructure, {node.name}, "node listed twice");
    }
    std::set<std::string> slots;
    for (const auto& slot : node.arity) {
      if (!slots.insert(slot).second) {
        report.add(axiom::kTreeStructure, {node.name, slot},
                   "slot listed twice in the arity of " + node.name);
      }
    }
  }
  if (!by_name.count(tree.root)) {
    report.add(axiom::kTreeStructure, {tree.root}, "root is not a node");
    return report;
  }

  std::set<std::pair<std::string, std::string>> used;
  // Out-edges child -> parent, one per well-formed triplet.
  std::map<std::string, std::vector<std::string>> up;
  for (const Triplet& t : tree.triplets) {
    auto p = by_name.find(t.parent);
    if (p == by_name.end() || !by_name.count(t.child)) {
      report.add(axiom::kTreeStructure, {t.parent, t.slot, t.child},
                 "triplet mentions an unknown node");
      continue;
    }
    const auto& arity = p->second->arity;
    if (std::find(arity.begin(), arity.end(), t.slot) == arity.end()) {
      report.add(axiom::kTreeStructure, {t.parent, t.slot, t.child},
                 t.slot + " is not in the arity of " + t.parent);
      continue;
    }
    if (!used.emplace(t.parent, t.slot).second) {
      report.add(axiom::kTripletUniqueness, {t.parent, t.slot},
                 "more than one triplet at this slot");
      continue;
    }
    up[t.child].push_back(t.parent);
  }

  // Count descending walks to the root by length, capped at 2. A walk as
  // long as the node count repeats a node, so one existing means infinitely
  // many paths.
  const std::size_t n = by_name.size();
  std::map<std::string, int> current, total;
  for (const auto& [name, node] : by_name) {
    current[name] = name == tree.root ? 1 : 0;
    total[name] = current[name];
  }
  for (std::size_t length = 1; length <= n; ++length) {
    std::map<std::string, int> next;
    for (const auto& [name, node] : by_name) {
      int walks = 0;
      for (const std::string& parent : up[name]) walks += current[parent];
      next[name] = std::min(walks, 2);
      total[name] = std::min(total[name] + next[name], 2);
    }
    current = std::move(next);
  }
  for (const auto& [name, node] : by_name) {
    if (current[name] > 0) total[name] = 2;
    if (total[name] == 0) {
      report.add(axiom::kUniquePathToRoot, {name}, "no descending path to the root");
    } else if (total[name] > 1) {
      report.add(axiom::kUniquePathToRoot, {name},
                 "more than one descending path to the root");
    }
  }
  return report;
}

}  // namespace opetope
