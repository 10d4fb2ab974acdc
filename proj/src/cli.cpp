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

#include "opetope/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opetope/builders.hpp"
#include "opetope/dfc_axioms.hpp"
#include "opetope/enumerate.hpp"
#include "opetope/io.hpp"
#include "opetope/paths.hpp"
#include "opetope/zpo_axioms.hpp"

namespace opetope::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  ComplexDocument document;
  Metadata metadata;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sniff_format(const std::string& path, const std::string& format) {
  if (!format.empty()) return format;
  if (path == "-") throw UsageError("reading stdin needs --format dsl|json");
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".dsl") return "dsl";
  if (ext == ".json") return "json";
  throw UsageError("cannot tell the format of " + path + "; pass --format dsl|json");
}

Loaded load(const std::string& path, const std::string& format) {
  const std::string text = read_all(path);
  try {
    ComplexDocument doc = sniff_format(path, format) == "dsl" ? parse_dsl(text)
                                                               : parse_json(text);
    Metadata meta = metadata_of(doc);
    return {std::move(doc), std::move(meta)};
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

FaceComplex require_complex(const Loaded& input) {
  return build_complex(input.document).complex();
}

json report_json(const AxiomReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations()) {
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
  }
  return {{"pass", report.passed()}, {"violations", std::move(violations)}};
}

void add_format_option(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Input format, overriding the file extension")
      ->check(CLI::IsMember({"dsl", "json"}));
}

int cmd_validate(const std::string& path, const std::string& format,
                 const std::string& mode, bool as_json, std::ostream& out,
                 std::ostream& err) {
  const Loaded input = load(path, format);
  const BuildResult built = build_complex(input.document);

  std::vector<std::pair<std::string, AxiomReport>> checks;
  if (!built.ok()) {
    if (mode == "both") {
      checks = {{"dfc", built.report()}, {"opetope", built.report()}};
    } else {
      checks = {{mode, built.report()}};
    }
  } else {
    const FaceComplex& c = built.complex();
    if (mode == "pop" || mode == "phg") {
      checks = {{mode, AxiomReport{}}};
    } else if (mode == "cardinal") {
      checks = {{mode, is_opetopic_cardinal(c)}};
    } else if (mode == "opetope") {
      checks = {{mode, is_positive_opetope(c)}};
    } else if (mode == "dfc") {
      checks = {{mode, is_dfc(c)}};
    } else {
      checks = {{"dfc", is_dfc(c)}, {"opetope", is_positive_opetope(c)}};
    }
  }

  bool passed = true;
  for (const auto& [name, report] : checks) passed = passed && report.passed();
  const bool both = mode == "both";
  const bool agree = !both || checks[0].second.passed() == checks[1].second.passed();

  if (as_json) {
    json doc{{"mode", mode}, {"pass", passed}};
    json results = json::object();
    for (const auto& [name, report] : checks) results[name] = report_json(report);
    doc["checks"] = std::move(results);
    if (both) doc["agreement"] = agree;
    out << doc.dump(2) << "\n";
  } else {
    std::string line;
    for (const auto& [name, report] : checks) {
      if (!line.empty()) line += ", ";
      line += name + (report.passed() ? ": pass" : ": fail");
    }
    if (both) line += agree ? ", agreement: yes" : ", agreement: no";
    out << line << "\n";
    // The two checks of a malformed complex share one report.
    const bool shared = both && !built.ok();
    for (std::size_t i = 0; i < (shared ? 1 : checks.size()); ++i) {
      out << checks[i].second.to_text();
    }
  }
  if (!agree) {
    err << "internal error: dfc and opetope checks disagree on " << path << "\n"
        << "reproduce with:\n"
        << emit_json(built.complex(), input.metadata) << "\n";
    return kExitInternal;
  }
  return passed ? kExitOk : kExitFailed;
}

void print_tree(const RootedTree& tree, const std::string& node, int depth,
                std::ostream& out) {
  const auto* n = tree.find(node);
  for (const auto& slot : n->arity) {
    out << std::string(2 * depth + 2, ' ') << slot;
    if (auto t = tree.triplet_at(node, slot)) {
      out << " <- " << t->child << "\n";
      print_tree(tree, t->child, depth + 1, out);
    } else {
      out << " (leaf)\n";
    }
  }
}

std::uint64_t work_limit_from_env() {
  const char* raw = std::getenv("OPETOPE_KIT_WORK_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultWorkLimit;
  std::uint64_t value = 0;
  std::istringstream in(raw);
  if (!(in >> value) || !in.eof()) {
    throw UsageError(std::string("OPETOPE_KIT_WORK_LIMIT is not a number: ") + raw);
  }
  return value;
}

// A .json map file holds one object of face name to face name.
std::map<std::string, FaceId> read_json_map(const std::string& path, const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw UsageError(path + ": expected a JSON object of face names");
  }
  std::map<std::string, FaceId> out;
  for (const auto& [from, to] : doc.items()) {
    if (!to.is_string()) throw UsageError(path + ": " + from + " must map to a face name");
    out.emplace(from, to.get<std::string>());
  }
  return out;
}

std::map<std::string, FaceId> read_map_file(const std::string& path) {
  const std::string text = read_all(path);
  if (std::filesystem::path(path).extension() == ".json") return read_json_map(path, text);
  std::map<std::string, FaceId> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto arrow = line.find("=>");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string from = arrow == std::string::npos ? "" : trim(line.substr(0, arrow));
    const std::string to = arrow == std::string::npos ? "" : trim(line.substr(arrow + 2));
    if (from.empty() || to.empty()) {
      throw UsageError(path + ": line " + std::to_string(number) + ": expected 'a => b'");
    }
    if (!out.emplace(from, to).second) {
      throw UsageError(path + ": line " + std::to_string(number) + ": " + from +
                       " mapped twice");
    }
  }
  return out;
}

struct Fixture {
  std::string name;
  std::string description;
  std::function<FaceComplex()> make;
};

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out{
      {"point", "a single point", [] { return point(); }},
      {"arrow", "one arrow between two points", [] { return arrow(); }},
  };
  for (int n = 1; n <= 5; ++n) {
    out.push_back({"two-cell-" + std::to_string(n),
                   "a 2-cell with " + std::to_string(n) + " source arrows",
                   [n] { return two_cell(n); }});
  }
  out.push_back({"three-one", "a 3-cell between two binary 2-cells",
                 [] { return three_one(); }});
  out.push_back({"example-tree", "the 3-cell over the four-node tree a1..a4",
                 [] { return three_cell_from_tree(example_rooted_tree()); }});
  out.push_back({"stacked-tree", "the 3-cell over a chain of three 2-cells",
                 [] { return three_cell_from_tree(stacked_tree()); }});
  out.push_back({"forked-tree", "the 3-cell over a root with two children",
                 [] { return three_cell_from_tree(forked_tree()); }});
  return out;
}

std::string emit_as(const FaceComplex& c, const Metadata& meta, const std::string& to) {
  return to == "json" ? emit_json(c, meta) + "\n" : emit_dsl(c, meta);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInternalInvariantBroken:
      return kExitInternal;
    case ErrorCode::kUnknownFaceReference:
    case ErrorCode::kDimensionOutOfRange:
    case ErrorCode::kDimensionTooLow:
    case ErrorCode::kDimensionTooHigh:
    case ErrorCode::kBudgetTooLarge:
    case ErrorCode::kSyntaxError:
    case ErrorCode::kDuplicateDeclaration:
    case ErrorCode::kJsonShapeError:
      return kExitUsage;
    default:
      return kExitFailed;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Check and explore positive opetopes and dendritic face complexes",
               "opetope-kit"};
  app.require_subcommand(1);

  std::string file, format, mode = "both", to = "dsl", face, anchor, from, target,
                                 map_path, emit_dir, from_file, to_file, fixture_name;
  bool as_json = false, as_dot = false, opetopes_only = false, count_only = false;
  int dim = 0, max_dim = 2, max_faces = 7;

  auto* validate = app.add_subcommand("validate", "Check a complex against the axioms");
  validate->add_option("file", file, "Input file (.dsl or .json, - for stdin)")->required();
  validate->add_option("--mode", mode, "pop, phg, cardinal, opetope, dfc or both")
      ->check(CLI::IsMember({"pop", "phg", "cardinal", "opetope", "dfc", "both"}));
  validate->add_flag("--json", as_json, "Print the report as JSON");
  add_format_option(validate, format);

  auto* convert = app.add_subcommand("convert", "Re-emit a complex as DSL or JSON");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to)->check(CLI::IsMember({"dsl", "json"}));
  add_format_option(convert, format);

  auto* tree = app.add_subcommand("tree", "Show the tree formed by the sources of a face");
  tree->add_option("file", file)->required();
  tree->add_option("--face", face)->required();
  tree->add_flag("--dot", as_dot, "Print Graphviz DOT");
  add_format_option(tree, format);

  auto* order = app.add_subcommand("order", "List the points in increasing order");
  order->add_option("file", file)->required();
  add_format_option(order, format);

  auto* partition = app.add_subcommand("partition", "Split a stratum into source blocks");
  partition->add_option("file", file)->required();
  partition->add_option("--dim", dim)->required();
  add_format_option(partition, format);

  auto* zigzag = app.add_subcommand("zigzag", "Simple zig-zag between two sources");
  zigzag->add_option("file", file)->required();
  zigzag->add_option("--anchor", anchor)->required();
  zigzag->add_option("--from", from)->required();
  zigzag->add_option("--to", target)->required();
  add_format_option(zigzag, format);

  auto* enumerate = app.add_subcommand("enumerate", "List small complexes up to isomorphism");
  enumerate->add_option("--max-dim", max_dim)->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-faces", max_faces)->check(CLI::PositiveNumber);
  enumerate->add_flag("--opetopes-only", opetopes_only);
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--emit-dir", emit_dir, "Write one DSL file per complex");

  auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram as Graphviz DOT");
  export_dot->add_option("file", file)->required();
  add_format_option(export_dot, format);

  auto* morphism = app.add_subcommand("morphism", "Check a map between two complexes");
  morphism->add_option("--from", from_file)->required();
  morphism->add_option("--to", to_file)->required();
  morphism->add_option("--map", map_path, "Lines of the form 'a => b', or a JSON object")->required();

  auto* fixture = app.add_subcommand("fixture", "Print a built-in complex");
  fixture->add_option("name", fixture_name)->required();
  fixture->add_option("--to", to)->check(CLI::IsMember({"dsl", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      return cmd_validate(file, format, mode, as_json, out, err);
    }
    if (convert->parsed()) {
      const Loaded input = load(file, format);
      out << emit_as(require_complex(input), input.metadata, to);
      return kExitOk;
    }
    if (tree->parsed()) {
      const FaceComplex c = require_complex(load(file, format));
      if (as_dot) {
        out << emit_dot_tree(c, face);
      } else {
        const RootedTree t = face_tree(c, face);
        out << t.root << "\n";
        print_tree(t, t.root, 0, out);
      }
      return kExitOk;
    }
    if (order->parsed()) {
      const FaceComplex c = require_complex(load(file, format));
      for (const FaceId& x : linear_order_s0(c)) out << x << "\n";
      return kExitOk;
    }
    if (partition->parsed()) {
      const FaceComplex c = require_complex(load(file, format));
      const SourcesPartition p = sources_partition(c, dim);
      for (const auto& [cell, block] : p.blocks) {
        out << cell << ":";
        for (std::size_t i = 0; i < block.size(); ++i) out << (i ? ", " : " ") << block[i];
        out << "\n";
      }
      out << "leftover: " << p.leftover << "\n";
      return kExitOk;
    }
    if (zigzag->parsed()) {
      const FaceComplex c = require_complex(load(file, format));
      out << simple_zigzag(c, anchor, from, target).to_string() << "\n";
      return kExitOk;
    }
    if (enumerate->parsed()) {
      EnumerationBudget budget;
      budget.max_dim = max_dim;
      budget.max_faces = max_faces;
      budget.work_limit = work_limit_from_env();
      const std::vector<FaceComplex> found =
          opetopes_only ? enumerate_positive_opetopes(budget) : enumerate_pops(budget);
      if (!emit_dir.empty()) {
        fs::create_directories(emit_dir);
        for (std::size_t i = 0; i < found.size(); ++i) {
          std::ostringstream name;
          name << (opetopes_only ? "opetope-" : "pop-") << std::setw(5)
               << std::setfill('0') << i + 1;
          std::ofstream file_out(fs::path(emit_dir) / (name.str() + ".dsl"),
                                 std::ios::binary);
          if (!file_out) throw UsageError("cannot write into " + emit_dir);
          file_out << emit_dsl(found[i], {name.str(), std::nullopt});
        }
      }
      if (count_only) {
        out << found.size() << "\n";
      } else if (emit_dir.empty()) {
        for (const FaceComplex& c : found) out << emit_json(c) << "\n";
      } else {
        err << "wrote " << found.size() << " files to " << emit_dir << "\n";
      }
      return kExitOk;
    }
    if (export_dot->parsed()) {
      out << emit_dot_hasse(require_complex(load(file, format)));
      return kExitOk;
    }
    if (morphism->parsed()) {
      const FaceComplex source = require_complex(load(from_file, ""));
      const FaceComplex target_complex = require_complex(load(to_file, ""));
      const Morphism m{&source, &target_complex, read_map_file(map_path)};
      const AxiomReport report = validate_morphism(m);
      out << (report.passed() ? "morphism: pass\n" : "morphism: fail\n")
          << report.to_text();
      return report.passed() ? kExitOk : kExitFailed;
    }
    if (fixture->parsed()) {
      for (const Fixture& f : fixtures()) {
        if (f.name == fixture_name) {
          out << emit_as(f.make(), {f.name, f.description}, to);
          return kExitOk;
        }
      }
      std::string known;
      for (const Fixture& f : fixtures()) known += " " + f.name;
      throw UsageError("unknown fixture " + fixture_name + "; known:" + known);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: not a positive-to-one poset\n" << e.report().to_text();
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace opetope::cli
