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

#ifndef ANNGRAPH_THEOREMS_HPP_
#define ANNGRAPH_THEOREMS_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "anngraph/analysis.hpp"

namespace anngraph {

enum class Status { pass, fail, inapplicable, inconclusive };
std::string_view to_string(Status s);

/// Outcome of one checker on one ring. A fail always carries the data that
/// contradicts the statement in `witness`.
struct Verdict {
  std::string theorem;
  std::string ring;
  Status status = Status::inapplicable;
  Json witness = Json::object();
  std::string notes;

  Json to_json() const;
};

// Diameter statements.
Verdict check_diameter_relation(const RingAnalysis& a);
Verdict check_two_prime_diameter(const RingAnalysis& a);
Verdict check_diameter_three(const RingAnalysis& a);
Verdict check_diameter_trichotomy(const RingAnalysis& a);
Verdict check_nilpotent_sum(const RingAnalysis& a);
Verdict check_non_annihilating_sum(const RingAnalysis& a);
Verdict check_many_primes_sum(const RingAnalysis& a);
Verdict check_diameter_cases(const RingAnalysis& a);
// Colouring statements.
Verdict check_chromatic_gap_algebra();
Verdict check_chromatic_one(const RingAnalysis& a);
Verdict check_bipartite_equivalence(const RingAnalysis& a);
Verdict check_artinian_bipartite(const RingAnalysis& a);
Verdict check_reduced_bipartite(const RingAnalysis& a);
Verdict check_prime_cube_coloring();
Verdict check_prime_annihilators(const RingAnalysis& a);
Verdict check_reduced_clique_coloring(const RingAnalysis& a);
Verdict check_reduced_graph_coloring(const RingAnalysis& a);
Verdict check_clique_equals_chromatic(const RingAnalysis& a);
Verdict check_square_zero_submodules(const RingAnalysis& a);

struct TheoremInfo {
  std::string id;
  std::string summary;
  /// Exactly one of these is set: per-ring checkers, or global checkers
  /// that build their own rings.
  std::function<Verdict(const RingAnalysis&)> per_ring;
  std::function<Verdict()> global;
};

/// All checkers in a fixed order.
const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo* find_theorem(std::string_view id);
/// Expands "all" and validates ids; throws std::invalid_argument naming the
/// first unknown id.
std::vector<std::string> resolve_theorem_ids(const std::vector<std::string>& requested);

/// Per-ring checkers among `ids` applied to `a`, in catalog order.
std::vector<Verdict> run_ring_checks(const RingAnalysis& a, const std::vector<std::string>& ids);
/// Global checkers among `ids`, in catalog order.
std::vector<Verdict> run_global_checks(const std::vector<std::string>& ids);

}  // namespace anngraph

#endif  // ANNGRAPH_THEOREMS_HPP_
