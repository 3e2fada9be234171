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

#ifndef ANNGRAPH_REPORT_HPP_
#define ANNGRAPH_REPORT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "anngraph/analysis.hpp"
#include "anngraph/ring.hpp"
#include "anngraph/theorems.hpp"

namespace anngraph {

inline constexpr std::string_view kVersion = "0.1.0";

enum class GraphSelection { ag, gamma, both };

std::string_view to_string(GraphSelection g);
/// Throws std::invalid_argument for anything but ag, gamma or both.
GraphSelection graph_selection_from_string(std::string_view s);

/// Caps and budgets, echoed into every report so bounded results can be
/// reproduced.
Json limits_json(const RingLimits& limits, const AnalysisOptions& options);

/// Top-level keys: ring, order, flags, lattice, ag, gamma, verdicts,
/// version, config. A graph that was not selected is null.
Json analysis_report(const RingAnalysis& a, std::vector<Verdict> verdicts, GraphSelection graphs,
                     const Json& config);

/// Verdicts sorted by (ring, theorem) with per-status counts.
Json verdict_report(std::vector<Verdict> verdicts, const Json& config);

/// Two-space indented JSON with a trailing newline.
std::string render_json(const Json& j);

/// Writes to a temporary file in the target directory, then renames it over
/// `path`. Throws std::runtime_error on I/O failure; `path` is untouched
/// in that case.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace anngraph

#endif  // ANNGRAPH_REPORT_HPP_
