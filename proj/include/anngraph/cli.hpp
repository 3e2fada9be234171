// Copyright 2026 The anngraph Authors. All Rights Reserved.
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

#ifndef ANNGRAPH_CLI_HPP_
#define ANNGRAPH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "anngraph/presentation.hpp"
#include "anngraph/ring.hpp"

namespace anngraph {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,        // parse errors, unknown rings or theorem ids, I/O
  kExitLimit = 2,        // size cap or search budget exceeded
  kExitViolation = 3,    // internal invariant violation, or a fail verdict
};

/// Presentations for names that need no spec file: the fixed algebra list,
/// "Z<n>", and products written "Z<a>xZ<b>[x...]". Helpers come first.
/// Throws PresentationError for any other name.
std::vector<RingPresentation> builtin_presentations(const std::vector<std::string>& names);

/// Entry point behind the `anngraph` tool. Subcommands: analyze, verify,
/// corpus. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anngraph

#endif  // ANNGRAPH_CLI_HPP_
