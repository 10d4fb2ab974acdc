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

#include "json.hpp"

#include "opetope/io.hpp"

namespace opetope {
namespace {

using nlohmann::json;

[[noreturn]] void shape_error(const std::string& path, const std::string& msg) {
  throw ParseError(ErrorCode::kJsonShapeError, path, msg);
}

const json& member(const json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end()) shape_error(key, "missing");
  if (!it->is_object()) shape_error(key, "expected an object");
  return *it;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

ComplexDocument parse_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto cut = what.find("error: "); cut != std::string::npos) what = what.substr(cut + 7);
    throw ParseError(ErrorCode::kSyntaxError, line, column, what);
  }
  if (!root.is_object()) shape_error("", "expected an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "faces" && key != "target" && key != "sources" && key != "name" &&
        key != "description") {
      shape_error(key, "unexpected key");
    }
    if ((key == "name" || key == "description") && !value.is_string()) {
      shape_error(key, "expected a string");
    }
  }

  ComplexDocument doc;
  if (root.contains("name")) doc.name = root["name"].get<std::string>();
  if (root.contains("description")) doc.description = root["description"].get<std::string>();

  const json& faces = member(root, "faces");
  std::map<std::string, int> dims;
  for (const auto& [id, dim] : faces.items()) {
    if (!dim.is_number_integer() || dim.get<long long>() < 0 ||
        dim.get<long long>() > 1'000'000) {
      shape_error("faces." + id, "expected a non-negative integer");
    }
    dims[id] = dim.get<int>();
    doc.faces.push_back({id, dims[id]});
  }
  static const json kEmpty = json::object();
  const json& targets = root.contains("target") ? member(root, "target") : kEmpty;
  const json& sources = root.contains("sources") ? member(root, "sources") : kEmpty;

  for (const auto& [id, dim] : dims) {
    if (dim == 0) continue;
    if (!targets.contains(id)) shape_error("target." + id, "missing");
    if (!sources.contains(id)) shape_error("sources." + id, "missing");
  }
  for (const auto& [id, target] : targets.items()) {
    if (auto d = dims.find(id); d != dims.end() && d->second == 0) {
      shape_error("target." + id, "a point has no target");
    }
    if (!target.is_string()) shape_error("target." + id, "expected a face name");
    doc.targets.push_back({id, target.get<std::string>()});
  }
  for (const auto& [id, list] : sources.items()) {
    if (auto d = dims.find(id); d != dims.end() && d->second == 0) {
      shape_error("sources." + id, "a point has no sources");
    }
    if (!list.is_array()) shape_error("sources." + id, "expected an array");
    ComplexDocument::SourceEntry entry{id, {}};
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_string()) {
        shape_error("sources." + id + "[" + std::to_string(i) + "]",
                    "expected a face name");
      }
      entry.sources.push_back(list[i].get<std::string>());
    }
    doc.sources.push_back(std::move(entry));
  }
  return doc;
}

std::string emit_json(const FaceComplex& complex, const Metadata& metadata) {
  json root = json::object();
  json faces = json::object();
  json targets = json::object();
  json sources = json::object();
  for (FaceIndex x = 0; x < static_cast<FaceIndex>(complex.size()); ++x) {
    faces[complex.name(x)] = complex.dim_at(x);
    if (complex.dim_at(x) == 0) continue;
    targets[complex.name(x)] = complex.name(complex.target_at(x));
    json list = json::array();
    for (FaceIndex s : complex.sources_at(x)) list.push_back(complex.name(s));
    sources[complex.name(x)] = std::move(list);
  }
  root["faces"] = std::move(faces);
  root["target"] = std::move(targets);
  root["sources"] = std::move(sources);
  if (metadata.name) root["name"] = *metadata.name;
  if (metadata.description) root["description"] = *metadata.description;
  return root.dump();
}

}  // namespace opetope
