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

#include "opetope/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace opetope {
namespace detail {

RawComplex to_raw(const FaceComplex& complex) {
  RawComplex raw;
  for (FaceIndex i = 0; i < static_cast<FaceIndex>(complex.size()); ++i) {
    raw.dims.push_back(complex.dim_at(i));
    raw.target.push_back(complex.dim_at(i) == 0 ? -1 : complex.target_at(i));
    raw.sources.push_back(complex.sources_at(i));
  }
  return raw;
}

}  // namespace detail

namespace {

using detail::RawComplex;

struct Cofaces {
  // (sign, coface): -1 when the face is a source of the coface, +1 when it is
  // the target.
  std::vector<std::vector<std::pair<int, int>>> of;
};

Cofaces cofaces(const RawComplex& c) {
  Cofaces out;
  out.of.resize(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (c.target[x] >= 0) out.of[c.target[x]].push_back({1, static_cast<int>(x)});
    for (int s : c.sources[x]) out.of[s].push_back({-1, static_cast<int>(x)});
  }
  return out;
}

using Signature = std::tuple<int, int, std::vector<int>, std::vector<std::pair<int, int>>>;

// Refines colors until stable; colors come out as ranks 0..cells-1.
void refine(const RawComplex& c, const Cofaces& co, std::vector<int>& color) {
  const std::size_t n = c.size();
  std::size_t cells = 0;
  std::vector<Signature> sig(n);
  while (true) {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> src;
      for (int s : c.sources[x]) src.push_back(color[s]);
      std::sort(src.begin(), src.end());
      std::vector<std::pair<int, int>> up;
      for (auto [sign, y] : co.of[x]) up.push_back({sign, color[y]});
      std::sort(up.begin(), up.end());
      sig[x] = {color[x], c.target[x] < 0 ? -1 : color[c.target[x]], std::move(src),
                std::move(up)};
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t x = 0; x < n; ++x) {
      color[x] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[x]) - distinct.begin());
    }
    if (distinct.size() == cells) return;
    cells = distinct.size();
  }
}

std::vector<int> certificate_of(const RawComplex& c, const std::vector<int>& pos) {
  const std::size_t n = c.size();
  std::vector<int> at(n);
  for (std::size_t x = 0; x < n; ++x) at[pos[x]] = static_cast<int>(x);
  std::vector<int> cert;
  for (std::size_t p = 0; p < n; ++p) {
    const int x = at[p];
    cert.push_back(c.dims[x]);
    cert.push_back(c.target[x] < 0 ? -1 : pos[c.target[x]]);
    std::vector<int> src;
    for (int s : c.sources[x]) src.push_back(pos[s]);
    std::sort(src.begin(), src.end());
    cert.push_back(static_cast<int>(src.size()));
    cert.insert(cert.end(), src.begin(), src.end());
  }
  return cert;
}

// Faces with identical target, sources and signed cofaces can be swapped by
// an automorphism, so only one of them needs to be individualized.
bool twins(const RawComplex& c, const Cofaces& co, int a, int b) {
  if (c.target[a] != c.target[b] || c.sources[a] != c.sources[b]) return false;
  auto sa = co.of[a];
  auto sb = co.of[b];
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

struct Search {
  const RawComplex& c;
  const Cofaces& co;
  std::vector<int> best_pos;
  std::vector<int> best_cert;
  bool found = false;

  void run(std::vector<int> color) {
    refine(c, co, color);
    const int n = static_cast<int>(c.size());
    std::vector<int> count(n, 0);
    for (int x = 0; x < n; ++x) ++count[color[x]];
    int cell = -1;
    for (int k = 0; k < n; ++k) {
      if (count[k] > 1) {
        cell = k;
        break;
      }
    }
    if (cell < 0) {
      std::vector<int> cert = certificate_of(c, color);
      if (!found || cert < best_cert) {
        best_cert = std::move(cert);
        best_pos = color;
        found = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (color[v] != cell) continue;
      bool redundant = false;
      for (int u : tried) {
        if (twins(c, co, u, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> next(n);
      for (int x = 0; x < n; ++x) next[x] = 2 * color[x] + (x == v ? 0 : 1);
      run(std::move(next));
    }
  }
};

std::string canonical_name(int dim, int i) {
  switch (dim) {
    case 0: return "x" + std::to_string(i);
    case 1: return "f" + std::to_string(i + 1);
    case 2: return "a" + std::to_string(i + 1);
    case 3: return "A" + std::to_string(i + 1);
    default: return "d" + std::to_string(dim) + "_" + std::to_string(i + 1);
  }
}

// Names in the given order of faces; i-th face of each dimension gets index i.
FaceComplex build_named(const RawComplex& c, const std::vector<int>& order) {
  std::vector<std::string> names(c.size());
  std::map<int, int> seen;
  for (int x : order) names[x] = canonical_name(c.dims[x], seen[c.dims[x]]++);
  ComplexDocument doc;
  for (int x : order) {
    doc.faces.push_back({names[x], c.dims[x]});
    if (c.dims[x] == 0) continue;
    doc.targets.push_back({names[x], names[c.target[x]]});
    std::vector<FaceId> src;
    for (int s : c.sources[x]) src.push_back(names[s]);
    doc.sources.push_back({names[x], std::move(src)});
  }
  return build_complex(doc).complex();
}

}  // namespace

CanonicalForm canonical_form(const RawComplex& complex) {
  const Cofaces co = cofaces(complex);
  Search search{complex, co, {}, {}, false};
  search.run(complex.dims);
  return {std::move(search.best_pos), std::move(search.best_cert)};
}

CanonicalForm canonical_form(const FaceComplex& complex) {
  return canonical_form(detail::to_raw(complex));
}

std::optional<std::map<FaceId, FaceId>> are_isomorphic(const FaceComplex& a,
                                                       const FaceComplex& b) {
  if (a.size() != b.size()) return std::nullopt;
  const CanonicalForm fa = canonical_form(a);
  const CanonicalForm fb = canonical_form(b);
  if (fa.certificate != fb.certificate) return std::nullopt;
  std::vector<FaceIndex> at(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) at[fb.position[i]] = static_cast<FaceIndex>(i);
  std::map<FaceId, FaceId> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[a.name(static_cast<FaceIndex>(i))] = b.name(at[fa.position[i]]);
  }
  return out;
}

FaceComplex canonical_relabel(const FaceComplex& complex) {
  return from_raw(detail::to_raw(complex));
}

FaceComplex from_raw(const detail::RawComplex& complex) {
  const CanonicalForm form = canonical_form(complex);
  std::vector<int> order(complex.size());
  for (std::size_t x = 0; x < complex.size(); ++x) order[form.position[x]] = static_cast<int>(x);
  return build_named(complex, order);
}

}  // namespace opetope
