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
#include "opetope/face_complex.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace opetope;
using testing_support::axioms_of;
using testing_support::thrown_code;

namespace {

ComplexDocument arrow_document() {
  ComplexDocument doc;
  doc.faces = {{"x", 0}, {"y", 0}, {"f", 1}};
  doc.targets = {{"f", "y"}};
  doc.sources = {{"f", {"x"}}};
  return doc;
}

std::vector<std::string> failures(const ComplexDocument& doc) {
  const BuildResult r = build_complex(doc);
  REQUIRE_FALSE(r.ok());
  return axioms_of(r.report());
}

}  // namespace

TEST_CASE("arrow builds with sorted indices and both cover signs") {
  const BuildResult r = build_complex(arrow_document());
  REQUIRE(r.ok());
  const FaceComplex& c = r.complex();
  CHECK(c.size() == 3);
  CHECK(c.dimension() == 1);
  CHECK(c.faces() == std::vector<FaceId>{"f", "x", "y"});
  CHECK(c.stratum(0) == std::vector<FaceId>{"x", "y"});
  CHECK(delta(c, "f") == std::vector<FaceId>{"x"});
  CHECK(gamma(c, "f") == "y");
  const FaceIndex f = c.index_of("f");
  CHECK(c.cover_sign(c.index_of("x"), f) == Sign::kMinus);
  CHECK(c.cover_sign(c.index_of("y"), f) == Sign::kPlus);
  CHECK_FALSE(c.cover_sign(c.index_of("x"), c.index_of("y")).has_value());
  CHECK(c == arrow());
}

TEST_CASE("points have neither target nor sources") {
  const FaceComplex c = point();
  CHECK(thrown_code([&] { gamma(c, "x"); }) == ErrorCode::kZeroDimensionalFace);
  CHECK(thrown_code([&] { delta(c, "x"); }) == ErrorCode::kZeroDimensionalFace);
  CHECK(thrown_code([&] { gamma(c, "nope"); }) == ErrorCode::kUnknownFaceReference);
}

TEST_CASE("iterated targets of the binary 2-cell") {
  const FaceComplex c = two_cell(2);
  CHECK(iterated_target(c, "alpha", 2) == "alpha");
  CHECK(iterated_target(c, "alpha", 1) == "h");
  CHECK(iterated_target(c, "alpha", 0) == "x2");
  CHECK(thrown_code([&] { iterated_target(c, "h", 2); }) == ErrorCode::kDimensionTooHigh);
  CHECK(thrown_code([&] { iterated_target(c, "h", -1); }) == ErrorCode::kDimensionTooHigh);
}

TEST_CASE("build_complex reports each malformation") {
  SUBCASE("empty") { CHECK(failures({}) == std::vector<std::string>{"EmptyComplex"}); }
  SUBCASE("missing target") {
    ComplexDocument doc = arrow_document();
    doc.targets.clear();
    CHECK(failures(doc) == std::vector<std::string>{"MissingTarget"});
  }
  SUBCASE("two targets") {
    ComplexDocument doc = arrow_document();
    doc.faces.push_back({"z", 0});
    doc.targets.push_back({"f", "z"});
    CHECK(failures(doc) == std::vector<std::string>{"MultipleTargets"});
  }
  SUBCASE("empty sources") {
    ComplexDocument doc = arrow_document();
    doc.sources.clear();
    CHECK(failures(doc) == std::vector<std::string>{"EmptySources"});
  }
  SUBCASE("sign clash names the face and its coface") {
    ComplexDocument doc = arrow_document();
    doc.sources = {{"f", {"y"}}};
    const BuildResult r = build_complex(doc);
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.report().violations().size() == 1);
    CHECK(r.report().violations()[0].axiom == "SignClash");
    CHECK(r.report().violations()[0].witness == std::vector<FaceId>{"y", "f"});
  }
  SUBCASE("1-face with two sources") {
    ComplexDocument doc = arrow_document();
    doc.faces.push_back({"z", 0});
    doc.sources = {{"f", {"x", "z"}}};
    CHECK(failures(doc) == std::vector<std::string>{"Delta0NotFunctional"});
  }
  SUBCASE("grading") {
    ComplexDocument doc = arrow_document();
    doc.faces[2].dim = 2;
    CHECK(failures(doc) == std::vector<std::string>{"GradingViolation", "GradingViolation"});
  }
  SUBCASE("point with a target") {
    ComplexDocument doc = arrow_document();
    doc.targets.push_back({"x", "y"});
    CHECK(failures(doc) == std::vector<std::string>{"GradingViolation"});
  }
  SUBCASE("unknown reference") {
    ComplexDocument doc = arrow_document();
    doc.targets = {{"f", "q"}};
    CHECK(failures(doc) == std::vector<std::string>{"MissingTarget", "UnknownFaceReference"});
  }
  SUBCASE("duplicate face and source") {
    ComplexDocument doc = arrow_document();
    doc.faces.push_back({"x", 0});
    doc.sources = {{"f", {"x", "x"}}};
    CHECK(failures(doc) == std::vector<std::string>{"DuplicateFace", "DuplicateSource"});
  }
  SUBCASE("complex() on a failure throws a ValidationError") {
    CHECK_THROWS_AS(build_complex({}).complex(), ValidationError);
  }
}

TEST_CASE("documents and hypergraph views round-trip") {
  for (const auto& [name, c] : testing_support::canonical_opetopes()) {
    CAPTURE(name);
    const BuildResult again = build_complex(to_document(c));
    REQUIRE(again.ok());
    CHECK(again.complex() == c);
    const HypergraphView view = to_hypergraph_view(c);
    CHECK(view.strata.size() == static_cast<std::size_t>(c.dimension() + 1));
    const BuildResult back = from_hypergraph_view(view);
    REQUIRE(back.ok());
    CHECK(back.complex() == c);
  }
}

TEST_CASE("hypergraph view of the binary 2-cell") {
  const HypergraphView view = to_hypergraph_view(two_cell(2));
  CHECK(view.strata[0] == std::vector<FaceId>{"x0", "x1", "x2"});
  CHECK(view.gamma[1].at("alpha") == "h");
  CHECK(view.delta[1].at("alpha") == std::vector<FaceId>{"f1", "f2"});
  CHECK(view.delta[0].at("h") == std::vector<FaceId>{"x0"});
}

TEST_CASE("morphisms") {
  const FaceComplex c = two_cell(2);
  SUBCASE("identity and its composite are valid") {
    const Morphism id = identity_morphism(c);
    CHECK(validate_morphism(id).passed());
    CHECK(validate_morphism(compose(id, id)).passed());
  }
  SUBCASE("swapping x1 and x2 breaks target commutation") {
    Morphism m = identity_morphism(c);
    m.map["x1"] = "x2";
    m.map["x2"] = "x1";
    const AxiomReport r = validate_morphism(m);
    CHECK(r.has_violation("target_commuting"));
    CHECK(r.violations_of("target_commuting").front().detail ==
          "f(gamma(f1)) = x2 but gamma(f(f1)) = x1");
  }
  SUBCASE("collapsing sources breaks bijectivity") {
    Morphism m = identity_morphism(c);
    m.map["f2"] = "f1";
    CHECK(validate_morphism(m).has_violation("source_bijective"));
  }
  SUBCASE("dimension changes are rejected") {
    Morphism m = identity_morphism(c);
    m.map["x0"] = "f1";
    CHECK(validate_morphism(m).has_violation("dimension_preserving"));
  }
  SUBCASE("partial and dangling maps throw") {
    Morphism m = identity_morphism(c);
    m.map.erase("x0");
    CHECK(thrown_code([&] { validate_morphism(m); }) == ErrorCode::kPreconditionViolation);
    m = identity_morphism(c);
    m.map["x0"] = "q";
    CHECK(thrown_code([&] { validate_morphism(m); }) == ErrorCode::kUnknownFaceReference);
  }
  SUBCASE("library and oracle agree on every graded map of the 2-cell to itself") {
    for (const auto& f : oracle::all_graded_maps(c, c)) {
      const Morphism m{&c, &c, f};
      CHECK(validate_morphism(m).passed() == oracle::brute_is_morphism(c, c, f));
    }
  }
}
