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

#ifndef OPETOPE_CLI_HPP_
#define OPETOPE_CLI_HPP_

#include <iosfwd>

namespace opetope::cli {

// Exit codes: 0 success, 1 axiom failure or rejected input, 2 parse or
// usage error, 3 internal invariant broken.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Runs the opetope-kit command line; payload goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opetope::cli

#endif  // OPETOPE_CLI_HPP_
