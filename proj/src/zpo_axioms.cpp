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

#include "opetope/zpo_axioms.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "opetope/relations.hpp"

namespace opetope {
namespace {

using IndexSet = std::set<FaceIndex>;

std::string render(const FaceComplex& c, const IndexSet& set) {
  std::string out = "{";
  bool first = true;
  for (FaceIndex i : set) {
    if (!first) out += ",";
    out += c.name(i);
    first = false;
  }
  return out + "}";
}

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

// Shortest step-cycle through the first face lying on one; empty if acyclic.
std::vector<std::string> find_cycle(const ClosedRelation& order,
                                    const StepRelation& step) {
  const auto& elems = order.elements();
  const std::size_t n = elems.size();
  for (std::size_t start = 0; start < n; ++start) {
    if (!order.less_at(start, start)) continue;
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v = 0; v < n; ++v) {
        if (!step.contains(elems[u], elems[v])) continue;
        if (v == start) {
          std::vector<std::string> cycle;
          for (std::size_t w = u; w != n; w = parent[w]) cycle.push_back(elems[w]);
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (parent[v] == n && v != start) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
  }
  return {};
}

}  // namespace

AxiomReport check_globularity(const FaceComplex& c) {
  AxiomReport report;
  for (int k = 2; k <= c.dimension(); ++k) {
    for (FaceIndex x : c.stratum_at(k)) {
      IndexSet dd, gd;
      for (FaceIndex b : c.sources_at(x)) {
        gd.insert(c.target_at(b));
        dd.insert(c.sources_at(b).begin(), c.sources_at(b).end());
      }
      const FaceIndex g = c.target_at(x);
      const IndexSet gg{c.target_at(g)};
      const IndexSet dg(c.sources_at(g).begin(), c.sources_at(g).end());
      const IndexSet gd_minus_dd = difference(gd, dd);
      const IndexSet dd_minus_gd = difference(dd, gd);
      if (gg != gd_minus_dd) {
        report.add(axiom::kGlobularity, {c.name(x)},
                   "gamma gamma = " + render(c, gg) +
                       " but gamma delta \\ delta delta = " +
                       render(c, gd_minus_dd));
      }
      if (dg != dd_minus_gd) {
        report.add(axiom::kGlobularity, {c.name(x)},
                   "delta gamma = " + render(c, dg) +
                       " but delta delta \\ gamma delta = " +
                       render(c, dd_minus_gd));
      }
    }
  }
  return report;
}

AxiomReport check_strictness(const FaceComplex& c) {
  AxiomReport report;
  for (int k = 0; k <= c.dimension(); ++k) {
    const StepRelation step = step_plus(c, k);
    const ClosedRelation order = closure(step);
    if (!order.is_irreflexive()) {
      report.add(axiom::kStrictness, find_cycle(order, step),
                 "<+ has a cycle on S_" + std::to_string(k));
    }
    if (k != 0) continue;
    const auto& elems = order.elements();
    bool reported = false;
    for (std::size_t i = 0; i < elems.size() && !reported; ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        if (!order.comparable_at(i, j)) {
          report.add(axiom::kStrictness, {elems[i], elems[j]},
                     "<+ is not linear on S_0");
          reported = true;
          break;
        }
      }
    }
  }
  return report;
}

AxiomReport check_disjointness(const FaceComplex& c) {
  AxiomReport report;
  for (int k = 1; k <= c.dimension(); ++k) {
    const ClosedRelation minus = order_minus(c, k);
    const ClosedRelation plus = order_plus(c, k);
    const auto& elems = plus.elements();
    bool reported = false;
    for (std::size_t i = 0; i < elems.size() && !reported; ++i) {
      for (std::size_t j = i; j < elems.size(); ++j) {
        if (plus.comparable_at(i, j) && minus.comparable_at(i, j)) {
          report.add(axiom::kDisjointness, {elems[i], elems[j]},
                     "comparable for both <- and <+ on S_" + std::to_string(k));
          reported = true;
          break;
        }
      }
    }
  }
  return report;
}

AxiomReport check_pencil_linearity(const FaceComplex& c) {
  AxiomReport report;
  for (int k = 1; k <= c.dimension(); ++k) {
    const ClosedRelation plus = order_plus(c, k);
    for (FaceIndex y : c.stratum_at(k - 1)) {
      const std::pair<const char*, const std::vector<FaceIndex>*> pencils[] = {
          {"target", &c.target_of(y)}, {"source", &c.source_of(y)}};
      for (const auto& [kind, members] : pencils) {
        bool reported = false;
        for (std::size_t i = 0; i < members->size() && !reported; ++i) {
          for (std::size_t j = i + 1; j < members->size(); ++j) {
            const FaceId& a = c.name((*members)[i]);
            const FaceId& b = c.name((*members)[j]);
            if (!plus.comparable(a, b)) {
              report.add(axiom::kPencilLinearity, {c.name(y), a, b},
                         std::string(kind) + " pencil of " + c.name(y) +
                             " is not linearly ordered by <+");
              reported = true;
              break;
            }
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_principality(const FaceComplex& c) {
  AxiomReport report;
  for (int k = 0; k <= c.dimension(); ++k) {
    std::vector<FaceId> leftover;
    for (FaceIndex x : c.stratum_at(k)) {
      if (c.source_of(x).empty()) leftover.push_back(c.name(x));
    }
    if (leftover.size() != 1) {
      report.add(axiom::kPrincipality, leftover,
                 std::to_string(leftover.size()) + " faces of S_" +
                     std::to_string(k) + " are sources of no face");
    }
  }
  return report;
}

AxiomReport is_opetopic_cardinal(const FaceComplex& c) {
  AxiomReport report = check_globularity(c);
  report.merge(check_strictness(c));
  report.merge(check_disjointness(c));
  report.merge(check_pencil_linearity(c));
  return report;
}

AxiomReport is_positive_opetope(const FaceComplex& c) {
  AxiomReport report = is_opetopic_cardinal(c);
  report.merge(check_principality(c));
  return report;
}

}  // namespace opetope
