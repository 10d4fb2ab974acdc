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

#include <algorithm>
#include <string>

namespace opetope {
namespace {

// Faces covered by x: its sources and its target.
std::vector<FaceIndex> covers(const FaceComplex& c, FaceIndex x) {
  std::vector<FaceIndex> out = c.sources_at(x);
  if (c.dim_at(x) > 0) out.push_back(c.target_at(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> below(const FaceComplex& c, FaceIndex top) {
  std::vector<char> seen(c.size(), 0);
  std::vector<FaceIndex> stack{top};
  seen[top] = 1;
  while (!stack.empty()) {
    const FaceIndex x = stack.back();
    stack.pop_back();
    for (FaceIndex y : covers(c, x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

const char* status_text(CompletionStatus status) {
  switch (status) {
    case CompletionStatus::kCompleted: return "completed";
    case CompletionStatus::kNoCompletion: return "no completion";
    case CompletionStatus::kAmbiguousCompletion: return "ambiguous completion";
    case CompletionStatus::kSignRuleViolation: return "sign rule violated";
  }
  return "";
}

LozengeCompletion complete_at(const FaceComplex& c, FaceIndex z, FaceIndex y,
                              FaceIndex x) {
  LozengeCompletion out;
  std::vector<FaceIndex> found;
  for (FaceIndex y2 : covers(c, x)) {
    if (y2 == y) continue;
    if (c.cover_sign(z, y2)) found.push_back(y2);
  }
  for (FaceIndex f : found) out.candidates.push_back(c.name(f));
  if (found.empty()) {
    out.status = CompletionStatus::kNoCompletion;
    return out;
  }
  if (found.size() > 1) {
    out.status = CompletionStatus::kAmbiguousCompletion;
    return out;
  }
  const FaceIndex y2 = found.front();
  out.lozenge = Lozenge{c.name(x), c.name(y), c.name(y2), c.name(z),
                        *c.cover_sign(y, x), *c.cover_sign(z, y),
                        *c.cover_sign(y2, x), *c.cover_sign(z, y2)};
  out.status = out.lozenge->sign_rule_holds() ? CompletionStatus::kCompleted
                                              : CompletionStatus::kSignRuleViolation;
  return out;
}

}  // namespace

FaceIndex greatest_element_at(const FaceComplex& c) {
  const auto& top = c.stratum_at(c.dimension());
  if (top.size() != 1) return kNoFace;
  const auto seen = below(c, top.front());
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return kNoFace;
  return top.front();
}

GreatestElement greatest_element(const FaceComplex& c) {
  GreatestElement out;
  const auto& top = c.stratum_at(c.dimension());
  if (top.size() != 1) {
    for (FaceIndex t : top) out.witness.push_back(c.name(t));
    return out;
  }
  const auto seen = below(c, top.front());
  auto missing = std::find(seen.begin(), seen.end(), 0);
  if (missing == seen.end()) {
    out.face = c.name(top.front());
  } else {
    out.witness = {c.name(top.front()),
                   c.name(static_cast<FaceIndex>(missing - seen.begin()))};
  }
  return out;
}

LozengeCompletion complete_half_lozenge(const FaceComplex& c, std::string_view z,
                                        std::string_view y, std::string_view x) {
  const FaceIndex zi = c.index_of(z);
  const FaceIndex yi = c.index_of(y);
  const FaceIndex xi = c.index_of(x);
  if (!c.cover_sign(yi, xi) || !c.cover_sign(zi, yi)) {
    throw Error(ErrorCode::kPreconditionViolation,
                std::string(z) + " < " + std::string(y) + " < " + std::string(x) +
                    " is not a chain of covers");
  }
  return complete_at(c, zi, yi, xi);
}

AxiomReport check_greatest_element(const FaceComplex& c) {
  AxiomReport report;
  GreatestElement g = greatest_element(c);
  if (!g.face) report.add(axiom::kGreatestElement, g.witness, "not found");
  return report;
}

AxiomReport check_oriented_thinness(const FaceComplex& c) {
  AxiomReport report;
  for (FaceIndex x = 0; x < static_cast<FaceIndex>(c.size()); ++x) {
    if (c.dim_at(x) < 2) continue;
    for (FaceIndex y : covers(c, x)) {
      for (FaceIndex z : covers(c, y)) {
        LozengeCompletion done = complete_at(c, z, y, x);
        if (done.ok()) continue;
        std::vector<FaceId> witness{c.name(z), c.name(y), c.name(x)};
        witness.insert(witness.end(), done.candidates.begin(),
                       done.candidates.end());
        report.add(axiom::kOrientedThinness, std::move(witness),
                   status_text(done.status));
      }
    }
  }
  return report;
}

AxiomReport check_acyclicity(const FaceComplex& c) {
  AxiomReport report;
  for (FaceIndex x = 0; x < static_cast<FaceIndex>(c.size()); ++x) {
    const int d = c.dim_at(x);
    if (d == 0) continue;
    const auto& ys = c.sources_at(x);
    if (ys.empty()) {
      report.add(axiom::kAcyclicity, {c.name(x)}, "empty set of sources");
      continue;
    }
    if (d == 1) {
      if (ys.size() != 1) {
        report.add(axiom::kAcyclicity, {c.name(x)},
                   "a 1-face must have a single source");
      }
      continue;
    }
    // Edge i -> j when gamma(ys[i]) is a source of ys[j].
    const std::size_t n = ys.size();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> stack;
    std::vector<FaceId> cycle;
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
      state[i] = 1;
      stack.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (!c.is_source(c.target_at(ys[i]), ys[j])) continue;
        if (state[j] == 1) {
          auto from = std::find(stack.begin(), stack.end(), j);
          for (auto it = from; it != stack.end(); ++it) cycle.push_back(c.name(ys[*it]));
          return true;
        }
        if (state[j] == 0 && self(self, j)) return true;
      }
      stack.pop_back();
      state[i] = 2;
      return false;
    };
    for (std::size_t i = 0; i < n && cycle.empty(); ++i) {
      if (state[i] == 0) dfs(dfs, i);
    }
    if (!cycle.empty()) {
      std::vector<FaceId> witness{c.name(x)};
      witness.insert(witness.end(), cycle.begin(), cycle.end());
      report.add(axiom::kAcyclicity, std::move(witness),
                 "cycle among the sources of " + c.name(x));
    }
  }
  return report;
}

AxiomReport is_dfc(const FaceComplex& c) {
  AxiomReport report = check_greatest_element(c);
  report.merge(check_oriented_thinness(c));
  report.merge(check_acyclicity(c));
  return report;
}

RootedTree face_tree(const FaceComplex& c, std::string_view face) {
  const FaceIndex x = c.index_of(face);
  if (c.dim_at(x) == 0) {
    throw Error(ErrorCode::kDimensionTooLow,
                std::string(face) + " has dimension 0 and no sources");
  }
  RootedTree tree;
  const auto& ys = c.sources_at(x);
  for (FaceIndex y : ys) {
    RootedTree::Node node{c.name(y), {}};
    for (FaceIndex z : c.sources_at(y)) node.arity.push_back(c.name(z));
    tree.nodes.push_back(std::move(node));
  }
  if (c.dim_at(x) == 1) {
    tree.root = c.name(ys.front());
  } else {
    for (FaceIndex y : ys) {
      for (FaceIndex z : c.sources_at(y)) {
        for (FaceIndex y2 : ys) {
          if (c.target_at(y2) == z) tree.triplets.push_back({c.name(y), c.name(z), c.name(y2)});
        }
      }
    }
    const FaceIndex gg = c.target_at(c.target_at(x));
    std::vector<FaceIndex> roots;
    for (FaceIndex y : ys) {
      if (c.target_at(y) == gg) roots.push_back(y);
    }
    if (roots.size() != 1) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  std::to_string(roots.size()) + " root candidates in delta(" +
                      std::string(face) + ")");
    }
    tree.root = c.name(roots.front());
  }
  AxiomReport report = validate_rooted_tree(tree);
  if (!report.passed()) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                "delta(" + std::string(face) + ") is not a rooted tree:\n" +
                    report.to_text());
  }
  return tree;
}

}  // namespace opetope
