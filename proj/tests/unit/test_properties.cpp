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

// Invariants checked over every complex the enumerator produces for a small
// budget.
#include "doctest.h"
#include "opetope/canonical.hpp"
#include "opetope/dfc_axioms.hpp"
#include "opetope/enumerate.hpp"
#include "opetope/paths.hpp"
#include "opetope/relations.hpp"
#include "opetope/zpo_axioms.hpp"
#include "oracles.hpp"

using namespace opetope;

namespace {

const std::vector<FaceComplex>& small_pops() {
  static const std::vector<FaceComplex> all = [] {
    EnumerationBudget b;
    b.max_dim = 3;
    b.max_faces = 7;
    return enumerate_pops(b);
  }();
  return all;
}

std::vector<FaceComplex> small_dfcs() {
  std::vector<FaceComplex> out;
  for (const FaceComplex& c : small_pops()) {
    if (is_dfc(c).passed()) out.push_back(c);
  }
  return out;
}

// Concatenates two zig-zags sharing an end and cancels immediate backtracks.
ZigZag concatenate(const ZigZag& a, const ZigZag& b) {
  std::vector<FaceId> entries = a.entries;
  std::vector<Sign> signs = a.signs;
  for (std::size_t i = 0; i < b.signs.size(); ++i) {
    const FaceId& d = b.entries[2 * i + 1];
    const FaceId& next = b.entries[2 * i + 2];
    if (!signs.empty() && entries[entries.size() - 2] == d && signs.back() == -b.signs[i]) {
      entries.resize(entries.size() - 2);
      signs.pop_back();
      continue;
    }
    entries.push_back(d);
    entries.push_back(next);
    signs.push_back(b.signs[i]);
  }
  return {a.anchor, entries, signs};
}

}  // namespace

TEST_CASE("the two characterisations agree") {
  REQUIRE(small_pops().size() > 100);
  for (const FaceComplex& c : small_pops()) {
    CHECK(is_dfc(c).passed() == is_positive_opetope(c).passed());
  }
}

TEST_CASE("greatest element and principality imply each other on cardinals") {
  for (const FaceComplex& c : small_pops()) {
    const bool greatest = greatest_element(c).face.has_value();
    CHECK(greatest == oracle::brute_greatest(c).has_value());
    if (is_opetopic_cardinal(c).passed() && greatest) CHECK(check_principality(c).passed());
    if (is_positive_opetope(c).passed()) CHECK(greatest);
  }
}

TEST_CASE("hypergraph views round-trip") {
  for (const FaceComplex& c : small_pops()) {
    const BuildResult back = from_hypergraph_view(to_hypergraph_view(c));
    REQUIRE(back.ok());
    CHECK(back.complex() == c);
  }
}

TEST_CASE("lozenge completion is an involution") {
  for (const FaceComplex& c : small_dfcs()) {
    for (const FaceId& x : c.faces()) {
      if (c.dim(x) < 2) continue;
      std::vector<FaceId> ys = delta(c, x);
      ys.push_back(gamma(c, x));
      for (const FaceId& y : ys) {
        std::vector<FaceId> zs = delta(c, y);
        zs.push_back(gamma(c, y));
        for (const FaceId& z : zs) {
          const LozengeCompletion once = complete_half_lozenge(c, z, y, x);
          REQUIRE(once.ok());
          CHECK(once.lozenge->sign_rule_holds());
          const LozengeCompletion twice =
              complete_half_lozenge(c, z, once.lozenge->right, x);
          REQUIRE(twice.ok());
          CHECK(twice.lozenge->right == y);
        }
      }
    }
  }
}

TEST_CASE("face trees: leaves are the free slots and every node reaches the root") {
  for (const FaceComplex& c : small_dfcs()) {
    for (const FaceId& x : c.faces()) {
      if (c.dim(x) < 1) continue;
      const RootedTree t = face_tree(c, x);
      std::size_t slots = 0;
      for (const auto& node : t.nodes) slots += node.arity.size();
      CHECK(t.leaves().size() == slots - t.triplets.size());
      for (const auto& node : t.nodes) {
        CHECK(t.path_to_root(node.name).size() <= t.nodes.size());
        if (c.dim(x) >= 2) {
          CHECK(path_to_root(c, x, node.name).primary() == t.path_to_root(node.name));
        }
      }
    }
  }
}

TEST_CASE("linear order on points is the unique topological sort") {
  for (const FaceComplex& c : small_dfcs()) {
    const std::vector<FaceId> order = linear_order_s0(c);
    const auto plus = oracle::brute_order_plus(c, 0);
    CHECK(order.size() == c.stratum(0).size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        CHECK(plus.contains({order[i], order[j]}));
        CHECK_FALSE(plus.contains({order[j], order[i]}));
      }
    }
    CHECK(order.back() == iterated_target(c, *greatest_element(c).face, 0));
  }
}

TEST_CASE("sources partitions rebuild every stratum") {
  for (const FaceComplex& c : small_dfcs()) {
    for (int k = 0; k < c.dimension(); ++k) {
      const SourcesPartition p = sources_partition(c, k);
      std::multiset<FaceId> all{p.leftover};
      for (const auto& [cell, block] : p.blocks) all.insert(block.begin(), block.end());
      const auto stratum = c.stratum(k);
      CHECK(all == std::multiset<FaceId>(stratum.begin(), stratum.end()));
      CHECK(p.blocks.size() == lambda_set(c, k + 1).size());
    }
  }
}

TEST_CASE("zig-zags compose along the tree") {
  for (const FaceComplex& c : small_dfcs()) {
    for (const FaceId& b : c.faces()) {
      if (c.dim(b) < 2) continue;
      const auto src = delta(c, b);
      for (const FaceId& p : src) {
        for (const FaceId& q : src) {
          for (const FaceId& r : src) {
            const ZigZag pq = simple_zigzag(c, b, p, q);
            const ZigZag qr = simple_zigzag(c, b, q, r);
            CHECK(concatenate(pq, qr) == simple_zigzag(c, b, p, r));
          }
        }
      }
    }
  }
}

TEST_CASE("every single edit of a small opetope is rejected") {
  EnumerationBudget b;
  b.max_dim = 3;
  b.max_faces = 9;
  const std::vector<FaceComplex> opetopes = enumerate_positive_opetopes(b);
  REQUIRE(opetopes.size() == 8);
  std::size_t mutants = 0;
  for (const FaceComplex& c : opetopes) {
    for (const ComplexDocument& doc : oracle::mutations(c)) {
      ++mutants;
      const BuildResult built = build_complex(doc);
      CHECK((!built.ok() || !is_dfc(built.complex()).passed() ||
             !is_positive_opetope(built.complex()).passed()));
    }
  }
  CHECK(mutants > 0);
}

TEST_CASE("isomorphism is an equivalence on enumerated classes") {
  const auto& all = small_pops();
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(are_isomorphic(all[i], all[i]).has_value());
    for (std::size_t j = i + 1; j < all.size() && all[j].size() == all[i].size(); ++j) {
      CHECK_FALSE(are_isomorphic(all[i], all[j]).has_value());
    }
  }
}
