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

#ifndef ANNGRAPH_ANALYSIS_HPP_
#define ANNGRAPH_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anngraph/graph.hpp"
#include "anngraph/ideal.hpp"
#include "anngraph/invariants.hpp"
#include "anngraph/ring.hpp"

namespace anngraph {

using Json = nlohmann::json;

struct AnalysisOptions {
  std::size_t ideal_budget = 100000;
  InvariantBudgets budgets;
  bool with_gamma = true;
};

/// Everything the theorem checkers need about one ring, computed once.
struct RingAnalysis {
  std::string name;
  RingPtr ring;
  IdealLattice lattice;

  bool reduced = false;
  bool zr_ideal = false;
  bool local = false;
  bool field = false;
  std::vector<std::size_t> minimal_primes;  // lattice indices
  std::vector<std::size_t> primes;          // lattice indices
  std::size_t nilradical_size = 0;
  std::optional<std::size_t> zr_index;  // lattice index of Z(R) when it is an ideal
  /// Reduced with exactly two minimal primes P1, P2, P1 n P2 = (0) and both
  /// R/Pi fields.
  bool two_fields = false;

  SimpleGraph ag;
  SimpleGraph gamma;
  InvariantReport ag_inv;
  InvariantReport gamma_inv;  // left default when with_gamma is false

  std::size_t nonzero_proper_ideals() const { return lattice.size() - 2; }
};

RingAnalysis analyze(const RingPtr& ring, const AnalysisOptions& options = {});

/// A finite length as a number, infinity as the string "inf".
Json extent_json(const Extent& e);
Json invariants_json(const SimpleGraph& g, const InvariantReport& r);
/// Distance-realizing pair for a connected graph with at least one vertex.
std::pair<std::size_t, std::size_t> diameter_witness(const SimpleGraph& g);

/// Tri-state comparison of an exact-or-bounded chromatic number with k.
std::optional<bool> chromatic_equals(const ColoringResult& c, std::size_t k);

}  // namespace anngraph

#endif  // ANNGRAPH_ANALYSIS_HPP_
