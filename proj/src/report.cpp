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

#include "opetope/report.hpp"

#include <algorithm>
#include <utility>

namespace opetope {

void AxiomReport::add(std::string_view axiom, std::vector<std::string> witness,
                      std::string detail) {
  violations_.push_back(
      Violation{std::string(axiom), std::move(witness), std::move(detail)});
}

void AxiomReport::merge(const AxiomReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(),
                     other.violations_.end());
}

bool AxiomReport::has_violation(std::string_view axiom) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::vector<Violation> AxiomReport::violations_of(std::string_view axiom) const {
  std::vector<Violation> out;
  std::copy_if(violations_.begin(), violations_.end(), std::back_inserter(out),
               [&](const Violation& v) { return v.axiom == axiom; });
  return out;
}

std::string display_name(std::string_view axiom) {
  std::string name(axiom);
  std::replace(name.begin(), name.end(), '_', ' ');
  return name;
}

std::string AxiomReport::to_text() const {
  std::string out;
  for (const Violation& v : violations_) {
    out += display_name(v.axiom);
    out += ": ";
    out += v.detail;
    if (!v.witness.empty()) {
      out += " [";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i > 0) out += ", ";
        out += v.witness[i];
      }
      out += "]";
    }
    out += "\n";
  }
  return out;
}

}  // namespace opetope
