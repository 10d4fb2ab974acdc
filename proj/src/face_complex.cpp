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

#include "opetope/face_complex.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace opetope {
namespace {

const std::vector<FaceIndex> kEmptyStratum;

std::string describe_dim(const FaceId& name, int dim) {
  return name + " has dimension " + std::to_string(dim);
}

}  // namespace

std::vector<FaceId> FaceComplex::stratum(int k) const {
  std::vector<FaceId> out;
  for (FaceIndex i : stratum_at(k)) out.push_back(names_[i]);
  return out;
}

std::optional<FaceIndex> FaceComplex::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<FaceIndex>(it - names_.begin());
}

FaceIndex FaceComplex::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::kUnknownFaceReference,
              "no face named '" + std::string(name) + "'");
}

const std::vector<FaceIndex>& FaceComplex::stratum_at(int k) const {
  if (k < 0 || k >= static_cast<int>(strata_.size())) return kEmptyStratum;
  return strata_[k];
}

std::optional<Sign> FaceComplex::cover_sign(FaceIndex y, FaceIndex x) const {
  if (targets_[x] == y) return Sign::kPlus;
  if (is_source(y, x)) return Sign::kMinus;
  return std::nullopt;
}

bool FaceComplex::is_source(FaceIndex y, FaceIndex x) const {
  const auto& s = sources_[x];
  return std::binary_search(s.begin(), s.end(), y);
}

// Validates a document and assembles the indexed representation.
class ComplexBuilder {
 public:
  static BuildResult build(const ComplexDocument& doc);
};

BuildResult ComplexBuilder::build(const ComplexDocument& doc) {
  AxiomReport report;
  if (doc.faces.empty()) {
    report.add(axiom::kEmptyComplex, {}, "a complex needs at least one face");
    return BuildResult(std::move(report));
  }

  std::map<FaceId, int> dims;
  for (const auto& decl : doc.faces) {
    if (!dims.emplace(decl.name, decl.dim).second) {
      report.add(axiom::kDuplicateFace, {decl.name},
                 "face declared more than once");
    }
    if (decl.dim < 0) {
      report.add(axiom::kGradingViolation, {decl.name},
                 "negative dimension " + std::to_string(decl.dim));
    }
  }

  auto known = [&](const FaceId& name) { return dims.count(name) > 0; };

  std::map<FaceId, std::vector<FaceId>> targets;
  for (const auto& entry : doc.targets) {
    bool ok = true;
    for (const FaceId* name : {&entry.face, &entry.target}) {
      if (!known(*name)) {
        report.add(axiom::kUnknownFaceReference, {*name},
                   "target entry for " + entry.face + " mentions an undeclared face");
        ok = false;
      }
    }
    if (ok) targets[entry.face].push_back(entry.target);
  }

  std::map<FaceId, std::vector<FaceId>> sources;
  std::set<FaceId> has_source_entry;
  for (const auto& entry : doc.sources) {
    if (!known(entry.face)) {
      report.add(axiom::kUnknownFaceReference, {entry.face},
                 "source entry for an undeclared face");
      continue;
    }
    if (!has_source_entry.insert(entry.face).second) {
      report.add(axiom::kDuplicateSource, {entry.face},
                 "sources listed in more than one entry");
    }
    auto& list = sources[entry.face];
    for (const FaceId& s : entry.sources) {
      if (!known(s)) {
        report.add(axiom::kUnknownFaceReference, {s},
                   "source of " + entry.face + " is undeclared");
        continue;
      }
      if (std::find(list.begin(), list.end(), s) != list.end()) {
        report.add(axiom::kDuplicateSource, {s, entry.face},
                   s + " listed twice as a source of " + entry.face);
        continue;
      }
      list.push_back(s);
    }
  }

  for (const auto& [name, dim] : dims) {
    auto t = targets.find(name);
    auto s = sources.find(name);
    const bool has_target = t != targets.end() && !t->second.empty();
    const bool has_sources = s != sources.end() && !s->second.empty();
    if (dim <= 0) {
      if (dim == 0 && (has_target || has_sources)) {
        report.add(axiom::kGradingViolation, {name},
                   "a dimension-0 face has no target and no sources");
      }
      continue;
    }
    if (!has_target) {
      report.add(axiom::kMissingTarget, {name}, "no target declared");
    } else {
      if (t->second.size() > 1) {
        std::vector<FaceId> witness{name};
        witness.insert(witness.end(), t->second.begin(), t->second.end());
        report.add(axiom::kMultipleTargets, std::move(witness),
                   "more than one target declared");
      }
      for (const FaceId& y : t->second) {
        if (dims[y] != dim - 1) {
          report.add(axiom::kGradingViolation, {y, name},
                     "target " + describe_dim(y, dims[y]) + " but " +
                         describe_dim(name, dim));
        }
      }
    }
    if (!has_sources) {
      report.add(axiom::kEmptySources, {name}, "no sources declared");
      continue;
    }
    for (const FaceId& y : s->second) {
      if (dims[y] != dim - 1) {
        report.add(axiom::kGradingViolation, {y, name},
                   "source " + describe_dim(y, dims[y]) + " but " +
                       describe_dim(name, dim));
      }
      if (has_target &&
          std::find(t->second.begin(), t->second.end(), y) != t->second.end()) {
        report.add(axiom::kSignClash, {y, name},
                   y + " is both the target and a source of " + name);
      }
    }
    if (dim == 1 && s->second.size() != 1) {
      std::vector<FaceId> witness{name};
      std::vector<FaceId> sorted = s->second;
      std::sort(sorted.begin(), sorted.end());
      witness.insert(witness.end(), sorted.begin(), sorted.end());
      report.add(axiom::kDelta0NotFunctional, std::move(witness),
                 "a 1-face must have exactly one source");
    }
  }

  if (!report.passed()) {
    AxiomReport sorted;
    auto violations = report.violations();
    std::sort(violations.begin(), violations.end(),
              [](const Violation& a, const Violation& b) {
                return std::tie(a.axiom, a.witness, a.detail) <
                       std::tie(b.axiom, b.witness, b.detail);
              });
    violations.erase(std::unique(violations.begin(), violations.end()),
                     violations.end());
    for (auto& v : violations) sorted.add(v.axiom, v.witness, v.detail);
    return BuildResult(std::move(sorted));
  }

  FaceComplex c;
  const std::size_t n = dims.size();
  c.names_.reserve(n);
  c.dims_.reserve(n);
  int max_dim = 0;
  for (const auto& [name, dim] : dims) {
    c.names_.push_back(name);
    c.dims_.push_back(dim);
    max_dim = std::max(max_dim, dim);
  }
  c.targets_.assign(n, kNoFace);
  c.sources_.assign(n, {});
  c.source_of_.assign(n, {});
  c.target_of_.assign(n, {});
  c.strata_.assign(max_dim + 1, {});
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<FaceIndex>(i);
    c.strata_[c.dims_[i]].push_back(x);
    if (c.dims_[i] == 0) continue;
    const FaceIndex t = *c.find(targets.at(c.names_[i]).front());
    c.targets_[i] = t;
    c.target_of_[t].push_back(x);
    for (const FaceId& s : sources.at(c.names_[i])) {
      const FaceIndex y = *c.find(s);
      c.sources_[i].push_back(y);
      c.source_of_[y].push_back(x);
    }
    std::sort(c.sources_[i].begin(), c.sources_[i].end());
  }
  return BuildResult(std::move(c));
}

BuildResult build_complex(const ComplexDocument& document) {
  return ComplexBuilder::build(document);
}

ValidationError::ValidationError(AxiomReport report)
    : Error(ErrorCode::kInvalidComplex,
            "complex fails validation:\n" + report.to_text()),
      report_(std::move(report)) {}

const FaceComplex& BuildResult::complex() const {
  if (!ok()) throw ValidationError(std::get<AxiomReport>(value_));
  return std::get<FaceComplex>(value_);
}

const AxiomReport& BuildResult::report() const {
  static const AxiomReport kPassing;
  if (ok()) return kPassing;
  return std::get<AxiomReport>(value_);
}

ComplexDocument to_document(const FaceComplex& complex) {
  ComplexDocument doc;
  for (FaceIndex i = 0; i < static_cast<FaceIndex>(complex.size()); ++i) {
    doc.faces.push_back({complex.name(i), complex.dim_at(i)});
    if (complex.dim_at(i) == 0) continue;
    doc.targets.push_back({complex.name(i), complex.name(complex.target_at(i))});
    ComplexDocument::SourceEntry entry{complex.name(i), {}};
    for (FaceIndex s : complex.sources_at(i)) entry.sources.push_back(complex.name(s));
    doc.sources.push_back(std::move(entry));
  }
  return doc;
}

namespace {

FaceIndex positive_face(const FaceComplex& complex, std::string_view face) {
  const FaceIndex x = complex.index_of(face);
  if (complex.dim_at(x) == 0) {
    throw Error(ErrorCode::kZeroDimensionalFace,
                std::string(face) + " has dimension 0 and no target or sources");
  }
  return x;
}

}  // namespace

std::vector<FaceId> delta(const FaceComplex& complex, std::string_view face) {
  std::vector<FaceId> out;
  for (FaceIndex s : complex.sources_at(positive_face(complex, face))) {
    out.push_back(complex.name(s));
  }
  return out;
}

FaceId gamma(const FaceComplex& complex, std::string_view face) {
  return complex.name(complex.target_at(positive_face(complex, face)));
}

FaceIndex iterated_target_at(const FaceComplex& complex, FaceIndex face, int k) {
  if (k < 0 || k > complex.dim_at(face)) {
    throw Error(ErrorCode::kDimensionTooHigh,
                "cannot take the dimension-" + std::to_string(k) +
                    " iterated target of " + complex.name(face) + " (" +
                    describe_dim(complex.name(face), complex.dim_at(face)) + ")");
  }
  while (complex.dim_at(face) > k) face = complex.target_at(face);
  return face;
}

FaceId iterated_target(const FaceComplex& complex, std::string_view face, int k) {
  return complex.name(iterated_target_at(complex, complex.index_of(face), k));
}

HypergraphView to_hypergraph_view(const FaceComplex& complex) {
  HypergraphView view;
  const int n = complex.dimension();
  view.strata.resize(n + 1);
  view.gamma.resize(n);
  view.delta.resize(n);
  for (int k = 0; k <= n; ++k) view.strata[k] = complex.stratum(k);
  for (int k = 1; k <= n; ++k) {
    for (FaceIndex x : complex.stratum_at(k)) {
      view.gamma[k - 1][complex.name(x)] = complex.name(complex.target_at(x));
      auto& sources = view.delta[k - 1][complex.name(x)];
      for (FaceIndex s : complex.sources_at(x)) sources.push_back(complex.name(s));
    }
  }
  return view;
}

BuildResult from_hypergraph_view(const HypergraphView& view) {
  ComplexDocument doc;
  for (std::size_t k = 0; k < view.strata.size(); ++k) {
    for (const FaceId& name : view.strata[k]) {
      doc.faces.push_back({name, static_cast<int>(k)});
    }
  }
  for (const auto& table : view.gamma) {
    for (const auto& [face, target] : table) doc.targets.push_back({face, target});
  }
  for (const auto& table : view.delta) {
    for (const auto& [face, sources] : table) doc.sources.push_back({face, sources});
  }
  return build_complex(doc);
}

Morphism identity_morphism(const FaceComplex& complex) {
  Morphism m{&complex, &complex, {}};
  for (const FaceId& name : complex.faces()) m.map.emplace(name, name);
  return m;
}

Morphism compose(const Morphism& first, const Morphism& second) {
  if (first.target != second.source) {
    throw Error(ErrorCode::kPreconditionViolation,
                "morphisms are not composable");
  }
  Morphism out{first.source, second.target, {}};
  for (const auto& [from, via] : first.map) {
    auto it = second.map.find(via);
    if (it == second.map.end()) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "second morphism is undefined on " + via);
    }
    out.map.emplace(from, it->second);
  }
  return out;
}

AxiomReport validate_morphism(const Morphism& morphism) {
  const FaceComplex& s = *morphism.source;
  const FaceComplex& t = *morphism.target;
  std::vector<FaceIndex> image(s.size(), kNoFace);
  for (const auto& [from, to] : morphism.map) {
    auto x = s.find(from);
    if (!x) {
      throw Error(ErrorCode::kUnknownFaceReference,
                  "morphism maps a face absent from its source: " + from);
    }
    auto y = t.find(to);
    if (!y) {
      throw Error(ErrorCode::kUnknownFaceReference,
                  "morphism maps into a face absent from its target: " + to);
    }
    image[*x] = *y;
  }
  for (FaceIndex x = 0; x < static_cast<FaceIndex>(s.size()); ++x) {
    if (image[x] == kNoFace) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "morphism is undefined on " + s.name(x));
    }
  }

  AxiomReport report;
  for (FaceIndex x = 0; x < static_cast<FaceIndex>(s.size()); ++x) {
    const FaceIndex fx = image[x];
    if (s.dim_at(x) != t.dim_at(fx)) {
      report.add(axiom::kDimensionPreserving, {s.name(x)},
                 s.name(x) + " has dimension " + std::to_string(s.dim_at(x)) +
                     " but its image " + t.name(fx) + " has dimension " +
                     std::to_string(t.dim_at(fx)));
      continue;
    }
    if (s.dim_at(x) == 0) continue;
    const FaceIndex image_of_target = image[s.target_at(x)];
    if (image_of_target != t.target_at(fx)) {
      report.add(axiom::kTargetCommuting, {s.name(x)},
                 "f(gamma(" + s.name(x) + ")) = " + t.name(image_of_target) +
                     " but gamma(f(" + s.name(x) + ")) = " +
                     t.name(t.target_at(fx)));
    }
    std::vector<FaceIndex> mapped;
    for (FaceIndex y : s.sources_at(x)) mapped.push_back(image[y]);
    std::sort(mapped.begin(), mapped.end());
    const bool injective =
        std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end();
    if (!injective || mapped != t.sources_at(fx)) {
      report.add(axiom::kSourceBijective, {s.name(x)},
                 "f does not restrict to a bijection delta(" + s.name(x) +
                     ") -> delta(" + t.name(fx) + ")");
    }
  }
  return report;
}

}  // namespace opetope
