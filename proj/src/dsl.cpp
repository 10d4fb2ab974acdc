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

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

#include "opetope/io.hpp"

namespace opetope {
namespace {

bool id_start(char ch) {
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}
bool id_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
}

class LineScanner {
 public:
  LineScanner(std::string_view line, int number) : line_(line), number_(number) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' ||
                                   line_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found =
        pos_ < line_.size() ? "'" + std::string(1, line_[pos_]) + "'" : "end of line";
    throw ParseError(ErrorCode::kSyntaxError, number_, column(),
                     "expected " + expected + ", found " + found);
  }

  std::string word() {
    skip_space();
    if (pos_ >= line_.size() || !id_start(line_[pos_])) fail("an identifier");
    const std::size_t begin = pos_;
    while (pos_ < line_.size() && id_char(line_[pos_])) ++pos_;
    return std::string(line_.substr(begin, pos_ - begin));
  }

  int number() {
    skip_space();
    if (pos_ >= line_.size() || !std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      fail("a dimension");
    }
    long value = 0;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      value = value * 10 + (line_[pos_] - '0');
      if (value > 1'000'000) fail("a dimension below 1000000");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void expect(std::string_view token) {
    skip_space();
    if (line_.substr(pos_, token.size()) != token) fail("'" + std::string(token) + "'");
    pos_ += token.size();
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void finish() {
    if (!at_end()) fail("end of line");
  }

 private:
  std::string_view line_;
  int number_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Located {
  int line;
  int column;
};

}  // namespace

bool is_dsl_identifier(std::string_view name) {
  if (name.empty() || !id_start(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return static_cast<unsigned char>(ch) < 0x80 && id_char(ch);
  });
}

Metadata metadata_of(const ComplexDocument& document) {
  return {document.name, document.description};
}

ComplexDocument parse_dsl(std::string_view text) {
  ComplexDocument doc;
  std::map<std::string, int> dims;
  std::map<std::string, Located> declared, with_target, with_sources;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;

    LineScanner scan(line, number);
    if (scan.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    if (scan.accept('#')) {
      const std::string body = trim(line.substr(line.find('#') + 1));
      if (body.starts_with("name:")) doc.name = trim(body.substr(5));
      if (body.starts_with("description:")) doc.description = trim(body.substr(12));
      if (end == text.size()) break;
      continue;
    }
    scan.skip_space();
    const int column = scan.column();
    const std::string keyword = scan.word();
    if (keyword == "face") {
      const int id_column = (scan.skip_space(), scan.column());
      const std::string id = scan.word();
      scan.expect(":");
      const int dim = scan.number();
      scan.finish();
      if (auto [it, fresh] = declared.emplace(id, Located{number, id_column}); !fresh) {
        throw ParseError(ErrorCode::kDuplicateDeclaration, number, id_column,
                         "face " + id + " already declared on line " +
                             std::to_string(it->second.line));
      }
      dims[id] = dim;
      doc.faces.push_back({id, dim});
    } else if (keyword == "tgt") {
      const int id_column = (scan.skip_space(), scan.column());
      const std::string id = scan.word();
      scan.expect("->");
      const std::string target = scan.word();
      scan.finish();
      if (auto [it, fresh] = with_target.emplace(id, Located{number, id_column}); !fresh) {
        throw ParseError(ErrorCode::kDuplicateDeclaration, number, id_column,
                         "target of " + id + " already given on line " +
                             std::to_string(it->second.line));
      }
      doc.targets.push_back({id, target});
    } else if (keyword == "src") {
      const int id_column = (scan.skip_space(), scan.column());
      const std::string id = scan.word();
      scan.expect("<-");
      std::vector<FaceId> sources{scan.word()};
      while (scan.accept(',')) sources.push_back(scan.word());
      scan.finish();
      if (auto [it, fresh] = with_sources.emplace(id, Located{number, id_column}); !fresh) {
        throw ParseError(ErrorCode::kDuplicateDeclaration, number, id_column,
                         "sources of " + id + " already given on line " +
                             std::to_string(it->second.line));
      }
      doc.sources.push_back({id, std::move(sources)});
    } else {
      throw ParseError(ErrorCode::kSyntaxError, number, column,
                       "expected 'face', 'tgt', 'src' or '#', found '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  for (const auto* entries : {&with_target, &with_sources}) {
    for (const auto& [id, where] : *entries) {
      auto d = dims.find(id);
      if (d != dims.end() && d->second == 0) {
        throw ParseError(ErrorCode::kSyntaxError, where.line, where.column,
                         "point " + id + " cannot have a target or sources");
      }
    }
  }
  return doc;
}

std::string emit_dsl(const FaceComplex& complex, const Metadata& metadata) {
  std::vector<FaceIndex> order(complex.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<FaceIndex>(i);
  std::stable_sort(order.begin(), order.end(), [&](FaceIndex a, FaceIndex b) {
    return complex.dim_at(a) < complex.dim_at(b);
  });
  for (const FaceId& name : complex.faces()) {
    if (!is_dsl_identifier(name)) {
      throw Error(ErrorCode::kNonAsciiName, "'" + name + "' is not a DSL identifier");
    }
  }
  auto one_line = [](const std::string& s) {
    std::string out = s;
    std::replace(out.begin(), out.end(), '\n', ' ');
    return trim(out);
  };
  std::string out;
  if (metadata.name) out += "# name: " + one_line(*metadata.name) + "\n";
  if (metadata.description) {
    out += "# description: " + one_line(*metadata.description) + "\n";
  }
  for (FaceIndex x : order) {
    out += "face " + complex.name(x) + " : " + std::to_string(complex.dim_at(x)) + "\n";
  }
  for (FaceIndex x : order) {
    if (complex.dim_at(x) == 0) continue;
    out += "tgt " + complex.name(x) + " -> " + complex.name(complex.target_at(x)) + "\n";
    out += "src " + complex.name(x) + " <-";
    bool first = true;
    for (FaceIndex s : complex.sources_at(x)) {
      out += (first ? " " : ", ") + complex.name(s);
      first = false;
    }
    out += "\n";
  }
  return out;
}

}  // namespace opetope
