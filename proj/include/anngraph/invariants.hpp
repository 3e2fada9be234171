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

#ifndef ANNGRAPH_INVARIANTS_HPP_
#define ANNGRAPH_INVARIANTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anngraph/graph.hpp"

namespace anngraph {

/// A non-negative length or infinity (no path / no cycle).
class Extent {
 public:
  static Extent finite(std::size_t v) { return Extent(v, false); }
  static Extent infinite() { return Extent(0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Only meaningful when finite.
  std::size_t value() const { return value_; }
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  bool operator==(const Extent&) const = default;

 private:
  Extent(std::size_t v, bool inf) : value_(v), infinite_(inf) {}
  std::size_t value_;
  bool infinite_;
};

struct InvariantBudgets {
  std::uint64_t clique_nodes = 100'000'000;
  std::uint64_t coloring_nodes = 20'000'000;
};

bool is_connected(const SimpleGraph& g);
/// 0 for a single vertex; infinite when disconnected. Throws EmptyGraph.
Extent diameter(const SimpleGraph& g);
/// Shortest cycle length, infinite when acyclic. Throws EmptyGraph.
Extent girth(const SimpleGraph& g);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending vertex ids
  std::uint64_t nodes = 0;
};

/// Exact maximum clique by branch and bound with a greedy-colouring bound.
/// Throws BudgetExceeded; never returns an approximation.
CliqueResult max_clique(const SimpleGraph& g, std::uint64_t node_budget = 100'000'000);
std::size_t clique_number(const SimpleGraph& g);

struct ColoringResult {
  std::size_t value = 0;  // chromatic number when exact, else the upper bound
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<std::size_t> coloring;  // proper colouring with `upper` colours
  std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR-ordered k-colouring backtracking from
/// k = clique number upward. Falls back to [lower, upper] bounds, flagged
/// inexact, when the node budget runs out.
ColoringResult chromatic_number(const SimpleGraph& g, std::uint64_t node_budget = 20'000'000,
                                std::optional<std::size_t> clique_hint = std::nullopt);

bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& coloring);
bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vertices);

struct Bipartition {
  bool bipartite = false;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

/// BFS 2-colouring, each component rooted at its lowest vertex.
Bipartition bipartition(const SimpleGraph& g);

struct StarShape {
  bool star = false;
  bool degenerate = false;  // single vertex
  std::optional<std::size_t> center;
};

bool is_complete(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
/// A single vertex counts as K_{1,0}; otherwise both parts are nonempty.
bool is_complete_bipartite(const SimpleGraph& g);
StarShape star_shape(const SimpleGraph& g);
bool is_star(const SimpleGraph& g);

struct InvariantReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool applicable = false;  // false for the vertexless graph
  bool connected = false;
  Extent diameter = Extent::infinite();
  Extent girth = Extent::infinite();
  CliqueResult clique;
  ColoringResult chromatic;
  bool complete = false;
  Bipartition parts;
  bool complete_bipartite = false;
  StarShape star;
};

InvariantReport compute_invariants(const SimpleGraph& g, const InvariantBudgets& budgets = {});

}  // namespace anngraph

#endif  // ANNGRAPH_INVARIANTS_HPP_
