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

#include "opetope/relations.hpp"

#include <algorithm>
#include <set>

namespace opetope {
namespace {

std::vector<FaceId> names_of(const FaceComplex& c,
                             const std::vector<FaceIndex>& faces) {
  std::vector<FaceId> out;
  out.reserve(faces.size());
  for (FaceIndex i : faces) out.push_back(c.name(i));
  return out;
}

void check_range(const FaceComplex& complex, int k) {
  if (k < 0 || k > complex.dimension()) {
    throw Error(ErrorCode::kDimensionOutOfRange,
                "dimension " + std::to_string(k) + " outside [0, " +
                    std::to_string(complex.dimension()) + "]");
  }
}

}  // namespace

bool StepRelation::contains(std::string_view a, std::string_view b) const {
  return std::binary_search(pairs.begin(), pairs.end(),
                            std::pair<FaceId, FaceId>(a, b));
}

StepRelation step_minus(const FaceComplex& complex, int k) {
  StepRelation rel{k, Sign::kMinus, complex.stratum(k), {}};
  if (k <= 0) return rel;
  std::set<std::pair<FaceId, FaceId>> pairs;
  for (FaceIndex x : complex.stratum_at(k)) {
    for (FaceIndex x2 : complex.source_of(complex.target_at(x))) {
      pairs.emplace(complex.name(x), complex.name(x2));
    }
  }
  rel.pairs.assign(pairs.begin(), pairs.end());
  return rel;
}

StepRelation step_plus(const FaceComplex& complex, int k) {
  StepRelation rel{k, Sign::kPlus, complex.stratum(k), {}};
  std::set<std::pair<FaceId, FaceId>> pairs;
  for (FaceIndex w : complex.stratum_at(k + 1)) {
    for (FaceIndex x : complex.sources_at(w)) {
      pairs.emplace(complex.name(x), complex.name(complex.target_at(w)));
    }
  }
  rel.pairs.assign(pairs.begin(), pairs.end());
  return rel;
}

ClosedRelation closure(const StepRelation& relation) {
  ClosedRelation out;
  out.dimension_ = relation.dimension;
  out.sign_ = relation.sign;
  std::set<FaceId> elements(relation.domain.begin(), relation.domain.end());
  for (const auto& [a, b] : relation.pairs) {
    elements.insert(a);
    elements.insert(b);
  }
  out.elements_.assign(elements.begin(), elements.end());
  const std::size_t n = out.elements_.size();
  out.matrix_.assign(n * n, 0);
  for (const auto& [a, b] : relation.pairs) {
    out.matrix_[*out.position(a) * n + *out.position(b)] = 1;
  }
  // Warshall.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.matrix_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (out.matrix_[k * n + j]) out.matrix_[i * n + j] = 1;
      }
    }
  }
  return out;
}

std::optional<std::size_t> ClosedRelation::position(std::string_view name) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), name);
  if (it == elements_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool ClosedRelation::less(std::string_view a, std::string_view b) const {
  auto i = position(a);
  auto j = position(b);
  return i && j && less_at(*i, *j);
}

bool ClosedRelation::leq(std::string_view a, std::string_view b) const {
  return a == b || less(a, b);
}

bool ClosedRelation::comparable(std::string_view a, std::string_view b) const {
  return less(a, b) || less(b, a);
}

std::vector<std::pair<FaceId, FaceId>> ClosedRelation::pairs() const {
  std::vector<std::pair<FaceId, FaceId>> out;
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (less_at(i, j)) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

bool ClosedRelation::is_irreflexive() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (less_at(i, i)) return false;
  }
  return true;
}

std::vector<FaceId> gamma_set(const FaceComplex& complex, int k) {
  check_range(complex, k);
  std::vector<FaceIndex> out;
  for (FaceIndex x : complex.stratum_at(k)) {
    if (!complex.target_of(x).empty()) out.push_back(x);
  }
  return names_of(complex, out);
}

std::vector<FaceId> lambda_set(const FaceComplex& complex, int k) {
  check_range(complex, k);
  std::vector<FaceIndex> out;
  for (FaceIndex x : complex.stratum_at(k)) {
    if (complex.target_of(x).empty()) out.push_back(x);
  }
  return names_of(complex, out);
}

std::vector<FaceId> iota(const FaceComplex& complex, std::string_view face) {
  const FaceIndex a = complex.index_of(face);
  if (complex.dim_at(a) < 2) {
    throw Error(ErrorCode::kDimensionTooLow,
                std::string(face) + " has dimension below 2");
  }
  std::set<FaceIndex> dd;
  std::set<FaceIndex> gd;
  for (FaceIndex b : complex.sources_at(a)) {
    gd.insert(complex.target_at(b));
    dd.insert(complex.sources_at(b).begin(), complex.sources_at(b).end());
  }
  std::vector<FaceIndex> both;
  std::set_intersection(dd.begin(), dd.end(), gd.begin(), gd.end(),
                        std::back_inserter(both));
  return names_of(complex, both);
}

std::vector<FaceId> FacePath::primary() const {
  std::vector<FaceId> out;
  for (std::size_t i = 0; i < faces.size(); i += 2) out.push_back(faces[i]);
  return out;
}

namespace {

std::vector<FaceIndex> resolve(const FaceComplex& complex,
                               std::span<const FaceId> sequence) {
  std::vector<FaceIndex> out;
  for (const FaceId& name : sequence) out.push_back(complex.index_of(name));
  return out;
}

}  // namespace

bool is_lower_path(const FaceComplex& complex, std::span<const FaceId> sequence) {
  const auto seq = resolve(complex, sequence);
  if (seq.empty() || seq.size() % 2 == 0) return false;
  for (std::size_t i = 0; i + 2 < seq.size(); i += 2) {
    const FaceIndex x = seq[i];
    const FaceIndex y = seq[i + 1];
    const FaceIndex next = seq[i + 2];
    if (complex.dim_at(x) == 0 || complex.dim_at(next) == 0) return false;
    if (complex.target_at(x) != y || !complex.is_source(y, next)) return false;
  }
  return true;
}

bool is_upper_path(const FaceComplex& complex, std::span<const FaceId> sequence) {
  const auto seq = resolve(complex, sequence);
  if (seq.empty() || seq.size() % 2 == 0) return false;
  for (std::size_t i = 0; i + 2 < seq.size(); i += 2) {
    const FaceIndex y = seq[i];
    const FaceIndex x = seq[i + 1];
    const FaceIndex next = seq[i + 2];
    if (complex.dim_at(x) == 0) return false;
    if (!complex.is_source(y, x) || complex.target_at(x) != next) return false;
  }
  return true;
}

}  // namespace opetope
