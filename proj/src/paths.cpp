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

#include "opetope/paths.hpp"

#include <algorithm>
#include <set>

#include "opetope/dfc_axioms.hpp"

namespace opetope {

FacePath path_to_root(const FaceComplex& complex, std::string_view c,
                      std::string_view d) {
  const FaceIndex ci = complex.index_of(c);
  FaceIndex di = complex.index_of(d);
  if (!complex.is_source(di, ci) || complex.dim_at(di) == 0) {
    throw Error(ErrorCode::kPreconditionViolation,
                std::string(d) + " is not a source of " + std::string(c) +
                    " of dimension at least 1");
  }
  FacePath path{PathKind::kLower, {complex.name(di)}};
  const FaceIndex stop = complex.target_at(complex.target_at(ci));
  std::size_t steps = 0;
  while (complex.target_at(di) != stop) {
    if (++steps > complex.sources_at(ci).size()) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  "lozenge walk inside delta(" + std::string(c) + ") does not end");
    }
    const FaceIndex z = complex.target_at(di);
    LozengeCompletion done =
        complete_half_lozenge(complex, complex.name(z), complex.name(di), c);
    if (!done.ok() || !complex.is_source(complex.index_of(done.lozenge->right), ci)) {
      throw Error(ErrorCode::kInternalInvariantBroken,
                  "cannot complete the lozenge " + complex.name(z) + " < " +
                      complex.name(di) + " < " + std::string(c));
    }
    di = complex.index_of(done.lozenge->right);
    path.faces.push_back(complex.name(z));
    path.faces.push_back(complex.name(di));
  }
  return path;
}

bool ZigZag::is_simple() const {
  for (std::size_t i = 3; i < entries.size(); i += 2) {
    if (entries[i] == entries[i - 2]) return false;
  }
  return true;
}

ZigZag ZigZag::reversed() const {
  ZigZag out{anchor, {entries.rbegin(), entries.rend()}, {}};
  for (auto it = signs.rbegin(); it != signs.rend(); ++it) out.signs.push_back(-*it);
  return out;
}

std::vector<FaceId> ZigZag::stations() const {
  std::vector<FaceId> out;
  for (std::size_t i = 0; i < entries.size(); i += 2) out.push_back(entries[i]);
  return out;
}

std::string ZigZag::to_string() const {
  std::string out = entries.empty() ? std::string() : entries.front();
  for (std::size_t i = 0; i < signs.size(); ++i) {
    out += " >";
    out += sign_char(signs[i]);
    out += " " + entries[2 * i + 1] + " <";
    out += sign_char(-signs[i]);
    out += " " + entries[2 * i + 2];
  }
  return out;
}

bool is_zigzag(const FaceComplex& complex, const ZigZag& zigzag) {
  if (zigzag.entries.size() != 2 * zigzag.signs.size() + 1) return false;
  const auto b = complex.find(zigzag.anchor);
  if (!b) return false;
  std::vector<FaceIndex> seq;
  for (const FaceId& name : zigzag.entries) {
    const auto i = complex.find(name);
    if (!i) return false;
    seq.push_back(*i);
  }
  for (std::size_t i = 0; i < seq.size(); i += 2) {
    if (!complex.is_source(seq[i], *b)) return false;
  }
  for (std::size_t i = 0; i < zigzag.signs.size(); ++i) {
    const auto left = complex.cover_sign(seq[2 * i + 1], seq[2 * i]);
    const auto right = complex.cover_sign(seq[2 * i + 1], seq[2 * i + 2]);
    if (left != zigzag.signs[i] || right != -zigzag.signs[i]) return false;
  }
  return true;
}

ZigZag simple_zigzag(const FaceComplex& complex, std::string_view b,
                     std::string_view c, std::string_view c2) {
  const FaceIndex bi = complex.index_of(b);
  const FaceIndex ci = complex.index_of(c);
  const FaceIndex c2i = complex.index_of(c2);
  if (!complex.is_source(ci, bi) || !complex.is_source(c2i, bi)) {
    throw Error(ErrorCode::kPreconditionViolation,
                std::string(c) + " and " + std::string(c2) +
                    " must both be sources of " + std::string(b));
  }
  ZigZag out{std::string(b), {std::string(c)}, {}};
  if (ci == c2i) return out;

  const RootedTree tree = face_tree(complex, b);
  const auto up = tree.path_to_root(std::string(c));
  const auto down = tree.path_to_root(std::string(c2));
  const std::set<std::string> above_c2(down.begin(), down.end());
  std::size_t meet = 0;
  while (!above_c2.contains(up[meet])) ++meet;
  const auto meet_in_down = std::find(down.begin(), down.end(), up[meet]) - down.begin();

  auto slot_above = [&](const std::string& child) {
    for (const Triplet& t : tree.triplets) {
      if (t.child == child) return t.slot;
    }
    throw Error(ErrorCode::kInternalInvariantBroken, child + " has no parent");
  };
  for (std::size_t i = 0; i < meet; ++i) {
    out.entries.push_back(slot_above(up[i]));
    out.entries.push_back(up[i + 1]);
    out.signs.push_back(Sign::kPlus);
  }
  for (auto i = meet_in_down; i > 0; --i) {
    out.entries.push_back(slot_above(down[i - 1]));
    out.entries.push_back(down[i - 1]);
    out.signs.push_back(Sign::kMinus);
  }
  return out;
}

std::vector<FaceId> linear_order_s0(const FaceComplex& complex) {
  std::vector<FaceIndex> starts;
  for (FaceIndex x : complex.stratum_at(0)) {
    if (complex.target_of(x).empty()) starts.push_back(x);
  }
  if (starts.size() != 1) {
    throw Error(ErrorCode::kPreconditionViolation,
                std::to_string(starts.size()) + " points are not targets; expected 1");
  }
  std::vector<FaceId> order;
  FaceIndex current = starts.front();
  const std::size_t points = complex.stratum_at(0).size();
  while (true) {
    order.push_back(complex.name(current));
    if (order.size() > points) {
      throw Error(ErrorCode::kPreconditionViolation, "walk on points revisits a point");
    }
    std::vector<FaceIndex> steps;
    for (FaceIndex w : complex.source_of(current)) {
      if (complex.target_of(w).empty()) steps.push_back(w);
    }
    if (steps.empty()) break;
    if (steps.size() > 1) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "several untargeted 1-faces leave " + complex.name(current));
    }
    current = complex.target_at(steps.front());
  }
  if (order.size() != points) {
    throw Error(ErrorCode::kPreconditionViolation,
                "walk on points stops after " + std::to_string(order.size()) +
                    " of " + std::to_string(points));
  }
  return order;
}

SourcesPartition sources_partition(const FaceComplex& complex, int k) {
  if (k < 0 || k >= complex.dimension()) {
    throw Error(ErrorCode::kDimensionOutOfRange,
                "partition dimension " + std::to_string(k) + " outside [0, " +
                    std::to_string(complex.dimension()) + ")");
  }
  const FaceIndex omega = greatest_element_at(complex);
  if (omega == kNoFace) {
    throw Error(ErrorCode::kPreconditionViolation, "no greatest element");
  }
  SourcesPartition out;
  out.dim = k;
  out.leftover = complex.name(iterated_target_at(complex, omega, k));
  std::set<FaceId> covered;
  for (const FaceId& c : lambda_set(complex, k + 1)) {
    auto& block = out.blocks[c];
    for (FaceIndex d : complex.sources_at(complex.index_of(c))) {
      block.push_back(complex.name(d));
      if (!covered.insert(complex.name(d)).second) {
        throw Error(ErrorCode::kInternalInvariantBroken,
                    complex.name(d) + " lies in two blocks");
      }
    }
  }
  if (covered.contains(out.leftover)) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                out.leftover + " is a source of a block");
  }
  covered.insert(out.leftover);
  if (covered.size() != complex.stratum_at(k).size()) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                "blocks do not cover stratum " + std::to_string(k));
  }
  return out;
}

}  // namespace opetope
