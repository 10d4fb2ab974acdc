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

#include "doctest.h"
#include "opetope/builders.hpp"
#include "opetope/relations.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace opetope;
using testing_support::thrown_code;
using Pairs = std::vector<std::pair<FaceId, FaceId>>;

TEST_CASE("step relations of the binary 2-cell") {
  const FaceComplex c = two_cell(2);
  CHECK(step_plus(c, 0).pairs == Pairs{{"x0", "x1"}, {"x0", "x2"}, {"x1", "x2"}});
  CHECK(step_plus(c, 1).pairs == Pairs{{"f1", "h"}, {"f2", "h"}});
  CHECK(step_plus(c, 2).pairs.empty());
  CHECK(step_minus(c, 0).pairs.empty());
  CHECK(step_minus(c, 1).pairs == Pairs{{"f1", "f2"}});
  CHECK(step_minus(c, 1).contains("f1", "f2"));
  CHECK_FALSE(step_minus(c, 1).contains("f2", "f1"));
}

TEST_CASE("closure adds transitive pairs") {
  const FaceComplex c = two_cell(3);
  const ClosedRelation minus = order_minus(c, 1);
  CHECK(minus.less("f1", "f3"));
  CHECK(minus.leq("f2", "f2"));
  CHECK_FALSE(minus.less("f3", "f1"));
  CHECK(minus.comparable("f3", "f1"));
  CHECK_FALSE(minus.comparable("h", "f1"));
  CHECK(minus.is_irreflexive());
  const ClosedRelation plus = order_plus(c, 0);
  CHECK(plus.pairs().size() == 6);
  CHECK(plus.less("x0", "x3"));
}

TEST_CASE("closure of a cyclic step relation is reflexive somewhere") {
  StepRelation r{1, Sign::kMinus, {"a", "b"}, {{"a", "b"}, {"b", "a"}}};
  const ClosedRelation c = closure(r);
  CHECK_FALSE(c.is_irreflexive());
  CHECK(c.less("a", "a"));
}

TEST_CASE("lambda and gamma sets") {
  const FaceComplex c = two_cell(2);
  CHECK(lambda_set(c, 0) == std::vector<FaceId>{"x0"});
  CHECK(gamma_set(c, 0) == std::vector<FaceId>{"x1", "x2"});
  CHECK(lambda_set(c, 1) == std::vector<FaceId>{"f1", "f2"});
  CHECK(gamma_set(c, 1) == std::vector<FaceId>{"h"});
  CHECK(lambda_set(c, 2) == std::vector<FaceId>{"alpha"});
  CHECK(gamma_set(c, 2).empty());
  CHECK(thrown_code([&] { lambda_set(c, 3); }) == ErrorCode::kDimensionOutOfRange);
  CHECK(thrown_code([&] { gamma_set(c, -1); }) == ErrorCode::kDimensionOutOfRange);
}

TEST_CASE("iota collects inner points") {
  CHECK(iota(two_cell(2), "alpha") == std::vector<FaceId>{"x1"});
  CHECK(iota(two_cell(3), "alpha") == std::vector<FaceId>{"x1", "x2"});
  CHECK(iota(two_cell(1), "alpha").empty());
  CHECK(iota(three_one(), "A").empty());
  CHECK(thrown_code([] { iota(arrow(), "f"); }) == ErrorCode::kDimensionTooLow);
}

TEST_CASE("lower and upper paths") {
  const FaceComplex c = two_cell(2);
  using Seq = std::vector<FaceId>;
  CHECK(is_lower_path(c, Seq{"f1", "x1", "f2"}));
  CHECK(is_lower_path(c, Seq{"f1"}));
  CHECK_FALSE(is_lower_path(c, Seq{"f2", "x2", "f1"}));
  CHECK_FALSE(is_lower_path(c, Seq{"f1", "x1"}));
  CHECK_FALSE(is_lower_path(c, Seq{}));
  CHECK(is_upper_path(c, Seq{"x0", "f1", "x1", "f2", "x2"}));
  CHECK_FALSE(is_upper_path(c, Seq{"x0", "f2", "x2"}));
  CHECK(thrown_code([&] { is_lower_path(c, Seq{"q"}); }) == ErrorCode::kUnknownFaceReference);
  const FacePath p{PathKind::kLower, {"f1", "x1", "f2"}};
  CHECK(p.primary() == Seq{"f1", "f2"});
}

TEST_CASE("closures agree with a depth-first oracle on small complexes") {
  for (const FaceComplex& c : oracle::naive_pops(2, 6)) {
    for (int k = 0; k <= c.dimension(); ++k) {
      const auto plus = order_plus(c, k).pairs();
      const auto minus = order_minus(c, k).pairs();
      CHECK(std::set<std::pair<FaceId, FaceId>>(plus.begin(), plus.end()) ==
            oracle::brute_order_plus(c, k));
      CHECK(std::set<std::pair<FaceId, FaceId>>(minus.begin(), minus.end()) ==
            oracle::brute_order_minus(c, k));
    }
  }
}
