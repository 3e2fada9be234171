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

// Text format for ring presentations:
//
//   ring "<name>" zn <m>
//   ring "<name>" product <name1> <name2> [...]
//   ring "<name>" algebra base=<m> gens=<sym>:<ord>[,...] rel <sym>*<sym> = <expr> [; rel ...]
//
// A statement runs from a line starting with `ring` up to the next such
// line, so long relation lists may be split across lines. `#` starts a
// comment that runs to the end of the line.

#ifndef ANNGRAPH_SPEC_FORMAT_HPP_
#define ANNGRAPH_SPEC_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "anngraph/presentation.hpp"

namespace anngraph {

/// Presentations in file order. Throws ParseError carrying the line number
/// for syntax errors, duplicate names, components not defined earlier in
/// the file, and relations that mention undeclared generators.
std::vector<RingPresentation> parse_spec(std::string_view text);

/// One statement, on one line, that parse_spec maps back to `p`.
std::string format_presentation(const RingPresentation& p);
std::string format_spec(const std::vector<RingPresentation>& presentations);

std::string format_expr(const LinearExpr& e);

}  // namespace anngraph

#endif  // ANNGRAPH_SPEC_FORMAT_HPP_
