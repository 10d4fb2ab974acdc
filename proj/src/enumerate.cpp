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

#include "opetope/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>

#include "opetope/canonical.hpp"
#include "opetope/zpo_axioms.hpp"

namespace opetope {
namespace {

using detail::RawComplex;

constexpr std::uint64_t kSaturated = UINT64_MAX;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// Multisets of size r drawn from n kinds.
std::uint64_t multisets(std::uint64_t n, int r) {
  if (r == 0) return 1;
  if (n == 0) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    // out * (n + i - 1) / i stays integral at every step.
    const std::uint64_t top = sat_mul(out, n + i - 1);
    if (top == kSaturated) return kSaturated;
    out = top / i;
  }
  return out;
}

// Possible (target, sources) pairs for a face over a stratum of size n.
std::uint64_t shape_count(int below_dim, std::uint64_t n) {
  if (n < 2) return 0;
  if (below_dim == 0) return n * (n - 1);
  if (n > 62) return kSaturated;
  return sat_mul(n, (std::uint64_t{1} << (n - 1)) - 1);
}

int cap(const EnumerationBudget& b, int k) {
  if (k < static_cast<int>(b.per_dim_caps.size())) return b.per_dim_caps[k];
  return b.max_faces;
}

struct Shape {
  int target;
  std::vector<int> sources;
};

std::vector<Shape> shapes_over(const std::vector<int>& stratum, int below_dim) {
  std::vector<Shape> out;
  const std::size_t n = stratum.size();
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != t) rest.push_back(i);
    }
    if (below_dim == 0) {
      for (std::size_t s : rest) out.push_back({stratum[t], {stratum[s]}});
      continue;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      Shape shape{stratum[t], {}};
      for (std::size_t j = 0; j < rest.size(); ++j) {
        if (mask >> j & 1) shape.sources.push_back(stratum[rest[j]]);
      }
      out.push_back(std::move(shape));
    }
  }
  return out;
}

struct Found {
  RawComplex raw;
  std::vector<int> certificate;
  int dim;
};

// Relabels a raw complex into canonical order.
RawComplex reorder(const RawComplex& c, const std::vector<int>& pos) {
  RawComplex out;
  const std::size_t n = c.size();
  out.dims.resize(n);
  out.target.resize(n);
  out.sources.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const int p = pos[x];
    out.dims[p] = c.dims[x];
    out.target[p] = c.target[x] < 0 ? -1 : pos[c.target[x]];
    for (int s : c.sources[x]) out.sources[p].push_back(pos[s]);
    std::sort(out.sources[p].begin(), out.sources[p].end());
  }
  return out;
}

}  // namespace

std::uint64_t estimate_work(const EnumerationBudget& budget) {
  std::uint64_t total = 0;
  // Depth-first over profiles (n0, n1, ...).
  std::function<void(int, int, int, std::uint64_t)> visit =
      [&](int k, int prev, int used, std::uint64_t work) {
        total = sat_add(total, work);
        if (k > budget.max_dim) return;
        const std::uint64_t kinds = shape_count(k - 1, prev);
        for (int n = 1; n <= std::min(cap(budget, k), budget.max_faces - used); ++n) {
          const std::uint64_t step = sat_mul(work, multisets(kinds, n));
          if (step == 0) break;
          visit(k + 1, n, used + n, step);
        }
      };
  for (int n0 = 1; n0 <= std::min(cap(budget, 0), budget.max_faces); ++n0) {
    visit(1, n0, n0, 1);
  }
  return total;
}

std::vector<FaceComplex> enumerate_pops(const EnumerationBudget& budget) {
  if (budget.max_dim < 0 || budget.max_faces < 1) {
    throw Error(ErrorCode::kPreconditionViolation,
                "budget needs max_dim >= 0 and max_faces >= 1");
  }
  const std::uint64_t work = estimate_work(budget);
  if (work > budget.work_limit) {
    throw Error(ErrorCode::kBudgetTooLarge,
                "estimated work " + std::to_string(work) + " exceeds the limit " +
                    std::to_string(budget.work_limit));
  }

  std::map<std::vector<int>, Found> classes;
  std::vector<Found> level;
  for (int n0 = 1; n0 <= std::min(cap(budget, 0), budget.max_faces); ++n0) {
    RawComplex raw{std::vector<int>(n0, 0), std::vector<int>(n0, -1),
                   std::vector<std::vector<int>>(n0)};
    CanonicalForm form = canonical_form(raw);
    Found f{reorder(raw, form.position), form.certificate, 0};
    classes.emplace(form.certificate, f);
    level.push_back(std::move(f));
  }

  for (int k = 0; k < budget.max_dim && !level.empty(); ++k) {
    std::map<std::vector<int>, Found> next;
    for (const Found& base : level) {
      std::vector<int> top;
      for (std::size_t x = 0; x < base.raw.size(); ++x) {
        if (base.raw.dims[x] == k) top.push_back(static_cast<int>(x));
      }
      const std::vector<Shape> shapes = shapes_over(top, k);
      const int room = std::min(cap(budget, k + 1),
                                budget.max_faces - static_cast<int>(base.raw.size()));
      if (room <= 0 || shapes.empty()) continue;
      // Non-decreasing index sequences choose multisets of shapes.
      std::vector<int> pick;
      std::function<void(int)> extend = [&](int from) {
        if (!pick.empty()) {
          RawComplex raw = base.raw;
          for (int s : pick) {
            raw.dims.push_back(k + 1);
            raw.target.push_back(shapes[s].target);
            raw.sources.push_back(shapes[s].sources);
          }
          CanonicalForm form = canonical_form(raw);
          if (!next.contains(form.certificate)) {
            next.emplace(form.certificate,
                         Found{reorder(raw, form.position), form.certificate, k + 1});
          }
        }
        if (static_cast<int>(pick.size()) == room) return;
        for (int s = from; s < static_cast<int>(shapes.size()); ++s) {
          pick.push_back(s);
          extend(s);
          pick.pop_back();
        }
      };
      extend(0);
    }
    level.clear();
    for (auto& [cert, found] : next) {
      level.push_back(found);
      classes.emplace(cert, std::move(found));
    }
  }

  std::vector<const Found*> sorted;
  for (const auto& [cert, found] : classes) sorted.push_back(&found);
  std::sort(sorted.begin(), sorted.end(), [](const Found* a, const Found* b) {
    return std::forward_as_tuple(a->raw.size(), a->dim, a->certificate) <
           std::forward_as_tuple(b->raw.size(), b->dim, b->certificate);
  });
  std::vector<FaceComplex> out;
  for (const Found* f : sorted) out.push_back(from_raw(f->raw));
  return out;
}

std::vector<FaceComplex> enumerate_positive_opetopes(const EnumerationBudget& budget) {
  std::vector<FaceComplex> out;
  for (FaceComplex& c : enumerate_pops(budget)) {
    if (is_positive_opetope(c).passed()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace opetope
