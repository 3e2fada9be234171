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

#ifndef ANNGRAPH_GRAPH_HPP_
#define ANNGRAPH_GRAPH_HPP_

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anngraph/bitset.hpp"
#include "anngraph/ideal.hpp"

namespace anngraph {

enum class GraphKind { annihilating_ideal, zero_divisor, plain };

std::string_view to_string(GraphKind kind);

/// Undirected loop-free graph with bitset adjacency rows. Vertex i carries a
/// unique label and an origin index (lattice index for AG, element index for
/// Gamma).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(GraphKind kind, std::string name, std::vector<std::string> labels,
              std::vector<std::size_t> origins = {});

  /// Plain graph on n vertices labelled "0".."n-1".
  static SimpleGraph with_vertices(std::size_t n);

  void add_edge(std::size_t u, std::size_t v);

  GraphKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return rows_.empty(); }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t u) const { return rows_[u]; }
  std::size_t degree(std::size_t u) const { return rows_[u].count(); }
  const std::string& label(std::size_t u) const { return labels_[u]; }
  std::size_t origin(std::size_t u) const { return origins_[u]; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  GraphKind kind_ = GraphKind::plain;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> origins_;
  std::vector<Bitset> rows_;
};

/// AG(R): nonzero proper ideals with nonzero annihilator, I -- J iff IJ = (0).
SimpleGraph build_ag(const IdealLattice& lattice);
/// Gamma(R): nonzero zero divisors, x -- y iff xy = 0.
SimpleGraph build_gamma(const FiniteRing& ring);

/// Graphviz text; vertices in graph order, edges sorted. Throws Error if the
/// stream fails.
void export_dot(const SimpleGraph& g, std::ostream& sink);
std::string to_dot(const SimpleGraph& g);

}  // namespace anngraph

#endif  // ANNGRAPH_GRAPH_HPP_
