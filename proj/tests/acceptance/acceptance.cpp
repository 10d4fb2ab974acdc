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

// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opetope/builders.hpp"
#include "opetope/dfc_axioms.hpp"
#include "opetope/enumerate.hpp"
#include "opetope/face_complex.hpp"
#include "opetope/paths.hpp"
#include "opetope/relations.hpp"
#include "opetope/zpo_axioms.hpp"
#include "oracles.hpp"

using namespace opetope;
namespace fs = std::filesystem;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_ > 0) {
      s << ", " << failed_ << " failed";
      for (const std::string& f : failures_) s << "; " << f;
    }
    if (checks_ == 0) s << ", nothing checked";
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string label(const FaceComplex& c) {
  std::ostringstream s;
  s << "{";
  for (const FaceId& f : c.faces()) s << " " << f << ":" << c.dim(f);
  s << " }";
  return s.str();
}

const std::vector<FaceComplex>& census() {
  static const std::vector<FaceComplex> all = [] {
    EnumerationBudget b;
    b.max_dim = 3;
    b.max_faces = 8;
    return enumerate_pops(b);
  }();
  return all;
}

const std::vector<FaceComplex>& census_dfcs() {
  static const std::vector<FaceComplex> all = [] {
    std::vector<FaceComplex> out;
    for (const FaceComplex& c : census()) {
      if (is_dfc(c).passed()) out.push_back(c);
    }
    return out;
  }();
  return all;
}

std::vector<FaceComplex> canonical_opetopes() {
  return {point(), arrow(), two_cell(1), two_cell(2), three_one()};
}

struct CommandResult {
  int code = -1;
  std::string out;
};

CommandResult shell(const std::string& command) {
  CommandResult r;
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string kit(const std::string& args) {
  return std::string("'") + OPETOPE_KIT_BINARY + "' " + args;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void equivalence(Tally& t) {
  for (const FaceComplex& c : census()) {
    t.expect(is_dfc(c).passed() == is_positive_opetope(c).passed(), "disagreement on " + label(c));
  }
}

void greatest_and_principal(Tally& t) {
  for (const FaceComplex& c : census()) {
    const bool greatest = greatest_element(c).face.has_value();
    if (is_opetopic_cardinal(c).passed() && greatest) {
      t.expect(check_principality(c).passed(), "greatest but not principal: " + label(c));
    }
    if (is_positive_opetope(c).passed()) {
      t.expect(greatest, "principal without greatest element: " + label(c));
    }
  }
}

void representations(Tally& t) {
  for (const FaceComplex& c : census()) {
    const BuildResult back = from_hypergraph_view(to_hypergraph_view(c));
    t.expect(back.ok() && back.complex() == c, "hypergraph round trip: " + label(c));
  }
  const std::vector<FaceComplex> fixtures = canonical_opetopes();
  const std::size_t n = fixtures.size();
  // valid[i][j] holds every morphism fixtures[i] -> fixtures[j].
  std::vector<std::vector<std::vector<Morphism>>> valid(n, std::vector<std::vector<Morphism>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    t.expect(validate_morphism(identity_morphism(fixtures[i])).passed(), "identity");
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& map : oracle::all_graded_maps(fixtures[i], fixtures[j])) {
        Morphism m{&fixtures[i], &fixtures[j], map};
        const bool ok = validate_morphism(m).passed();
        t.expect(ok == oracle::brute_is_morphism(fixtures[i], fixtures[j], map),
                 "morphism check disagrees with the direct check");
        if (ok) valid[i][j].push_back(std::move(m));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (const Morphism& f : valid[i][j]) {
          for (const Morphism& g : valid[j][k]) {
            t.expect(validate_morphism(compose(f, g)).passed(), "composite is not a morphism");
          }
        }
      }
    }
  }
}

void structure(Tally& t) {
  for (const FaceComplex& c : census_dfcs()) {
    const FaceId omega = *greatest_element(c).face;
    for (int k = 0; k < c.dimension(); ++k) {
      const FaceId top_k = iterated_target(c, omega, k);
      const std::vector<FaceId> lambda_above = lambda_set(c, k + 1);

      // Independent partition: the leftover plus delta(x) over Lambda_{k+1}.
      std::multiset<FaceId> pieces{top_k};
      for (const FaceId& x : lambda_above) {
        for (const FaceId& s : delta(c, x)) pieces.insert(s);
      }
      const auto stratum = c.stratum(k);
      t.expect(pieces == std::multiset<FaceId>(stratum.begin(), stratum.end()),
               "sources do not partition stratum " + std::to_string(k) + " of " + label(c));
      const SourcesPartition p = sources_partition(c, k);
      t.expect(p.leftover == top_k, "partition leftover");
      std::set<FaceId> keys;
      for (const auto& [cell, block] : p.blocks) {
        keys.insert(cell);
        t.expect(block == delta(c, cell), "partition block");
      }
      t.expect(keys == std::set<FaceId>(lambda_above.begin(), lambda_above.end()), "partition keys");

      // Lambda_k sits inside the sources of the (k+1)-dimensional output.
      const auto out_sources = delta(c, iterated_target(c, omega, k + 1));
      for (const FaceId& y : lambda_set(c, k)) {
        t.expect(std::find(out_sources.begin(), out_sources.end(), y) != out_sources.end(),
                 "Lambda face outside the output sources: " + y + " in " + label(c));
      }

      const auto gammas = gamma_set(c, k);
      for (const FaceId& y : stratum) {
        std::size_t as_source = 0;
        std::size_t as_target = 0;
        bool any_source = false;
        for (const FaceId& x : c.stratum(k + 1)) {
          const auto d = delta(c, x);
          const bool in = std::find(d.begin(), d.end(), y) != d.end();
          any_source = any_source || in;
          const bool lam = std::find(lambda_above.begin(), lambda_above.end(), x) != lambda_above.end();
          if (lam && in) ++as_source;
          if (lam && gamma(c, x) == y) ++as_target;
        }
        if (!any_source) t.expect(y == top_k, "non-source face is not the iterated target: " + y);
        if (any_source) t.expect(as_source == 1, "source in " + std::to_string(as_source) + " Lambda blocks");
        if (std::find(gammas.begin(), gammas.end(), y) != gammas.end()) {
          t.expect(as_target == 1, "target of " + std::to_string(as_target) + " Lambda faces");
        }
      }
    }

    const std::vector<FaceId> order = linear_order_s0(c);
    const ClosedRelation plus = order_plus(c, 0);
    const auto brute = oracle::brute_order_plus(c, 0);
    t.expect(order.size() == c.stratum(0).size(), "linear order size");
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        t.expect(plus.less(order[i], order[j]) == (i < j), "linear order vs closure");
        t.expect(brute.contains({order[i], order[j]}) == (i < j), "linear order vs search");
      }
    }
  }
}

void certificates(Tally& t) {
  for (const FaceComplex& c : census_dfcs()) {
    for (const FaceId& x : c.faces()) {
      if (c.dim(x) < 1) continue;
      const std::vector<FaceId> sources = delta(c, x);

      // Every chain below x completes to a lozenge, and completing twice
      // returns to the start.
      std::vector<FaceId> ys = sources;
      ys.push_back(gamma(c, x));
      for (const FaceId& y : ys) {
        if (c.dim(y) < 1) continue;
        std::vector<FaceId> zs = delta(c, y);
        zs.push_back(gamma(c, y));
        for (const FaceId& z : zs) {
          const LozengeCompletion once = complete_half_lozenge(c, z, y, x);
          t.expect(once.ok() && once.lozenge->sign_rule_holds(), "lozenge " + z + " " + y + " " + x);
          if (!once.ok()) continue;
          const LozengeCompletion twice = complete_half_lozenge(c, z, once.lozenge->right, x);
          t.expect(twice.ok() && twice.lozenge->right == y, "lozenge involution");
        }
      }

      if (c.dim(x) < 2) continue;
      const RootedTree tree = face_tree(c, x);
      for (const FaceId& d : sources) {
        t.expect(path_to_root(c, x, d).primary() == tree.path_to_root(d),
                 "path to root of " + d + " under " + x);
      }
      if (sources.size() > 4) continue;
      for (const FaceId& p : sources) {
        for (const FaceId& q : sources) {
          const auto found = oracle::all_simple_zigzags(c, x, p, q, 2 * sources.size());
          t.expect(found.size() == 1 && found.front() == simple_zigzag(c, x, p, q),
                   "zig-zag " + p + " to " + q + " under " + x);
        }
      }
    }
  }
}

void mutation_suite(Tally& t) {
  for (const FaceComplex& c : canonical_opetopes()) {
    for (const ComplexDocument& doc : oracle::mutations(c)) {
      const BuildResult built = build_complex(doc);
      const bool killed = !built.ok() || !is_dfc(built.complex()).passed() ||
                          !is_positive_opetope(built.complex()).passed();
      t.expect(killed, "mutant of " + label(c) + " survived");
    }
  }
}

void corpus(Tally& t) {
  const std::vector<std::string> expected = {
      "point",      "arrow",      "two-cell-1", "two-cell-2",   "two-cell-3",  "two-cell-4",
      "two-cell-5", "three-one",  "example-tree", "stacked-tree", "forked-tree"};
  const fs::path dir = fs::path(OPETOPE_SOURCE_DIR) / "corpus";
  for (const std::string& name : expected) {
    const fs::path file = dir / (name + ".dsl");
    const std::string path = "'" + file.string() + "'";
    t.expect(fs::exists(file), "missing corpus file " + name);
    const CommandResult v = shell(kit("validate " + path + " --mode both"));
    t.expect(v.code == 0 && v.out.rfind("dfc: pass, opetope: pass, agreement: yes\n", 0) == 0,
             "validate " + name);

    const std::string bytes = slurp(file);
    t.expect(shell(kit("convert " + path + " --to dsl")).out == bytes, "dsl re-emit " + name);
    t.expect(shell(kit("fixture " + name)).out == bytes, "fixture matches file " + name);

    const fs::path json = fs::temp_directory_path() / ("opetope-acceptance-" + name + ".json");
    const CommandResult to_json = shell(kit("convert " + path + " --to json"));
    std::ofstream(json, std::ios::binary) << to_json.out;
    const std::string jpath = "'" + json.string() + "'";
    t.expect(shell(kit("convert " + jpath + " --to json")).out == to_json.out, "json re-emit " + name);
    t.expect(shell(kit("convert " + jpath + " --to dsl")).out == bytes, "json back to dsl " + name);
    fs::remove(json);
  }
}

std::size_t count_opetopes(const std::vector<FaceComplex>& all) {
  std::size_t n = 0;
  for (const FaceComplex& c : all) n += is_positive_opetope(c).passed() ? 1 : 0;
  return n;
}

void census_regression(Tally& t) {
  struct Golden {
    int max_dim;
    int max_faces;
    std::size_t opetopes;
  };
  for (const Golden g : {Golden{2, 7, 4}, Golden{1, 3, 2}}) {
    const std::string tag = "dim " + std::to_string(g.max_dim) + ", " + std::to_string(g.max_faces) + " faces";
    const std::vector<FaceComplex> naive = oracle::naive_pops(g.max_dim, g.max_faces);
    t.expect(count_opetopes(naive) == g.opetopes, "naive generator count at " + tag);

    EnumerationBudget b;
    b.max_dim = g.max_dim;
    b.max_faces = g.max_faces;
    const std::vector<FaceComplex> fast = enumerate_pops(b);
    t.expect(fast.size() == naive.size(), "pop counts differ at " + tag);
    t.expect(enumerate_positive_opetopes(b).size() == g.opetopes, "enumerator count at " + tag);

    const CommandResult cli = shell(kit("enumerate --max-dim " + std::to_string(g.max_dim) +
                                        " --max-faces " + std::to_string(g.max_faces) +
                                        " --opetopes-only --count-only"));
    t.expect(cli.code == 0 && cli.out == std::to_string(g.opetopes) + "\n", "cli count at " + tag);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"equivalence of the two characterisations", equivalence},
      {"greatest element and principality", greatest_and_principal},
      {"representation equivalence", representations},
      {"structure of dendritic complexes", structure},
      {"constructive certificates", certificates},
      {"mutation suite", mutation_suite},
      {"corpus fixtures", corpus},
      {"census regression", census_regression},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      criteria[i].run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    all = all && t.passed();
    std::cout << (t.passed() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name
              << " (" << t.summary() << ")" << std::endl;
  }
  return all ? 0 : 1;
}
