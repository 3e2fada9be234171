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

#include "anngraph/graph.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "anngraph/errors.hpp"

namespace anngraph {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::annihilating_ideal: return "AG";
    case GraphKind::zero_divisor: return "Gamma";
    case GraphKind::plain: return "G";
  }
  return "?";
}

SimpleGraph::SimpleGraph(GraphKind kind, std::string name, std::vector<std::string> labels,
                         std::vector<std::size_t> origins)
    : kind_(kind), name_(std::move(name)), labels_(std::move(labels)), origins_(std::move(origins)) {
  const std::size_t n = labels_.size();
  if (origins_.empty())
    for (std::size_t i = 0; i < n; ++i) origins_.push_back(i);
  if (origins_.size() != n) throw std::invalid_argument("origin count differs from vertex count");
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != n) throw InvariantViolation("duplicate vertex labels in graph " + name_);
  rows_.assign(n, Bitset(n));
}

SimpleGraph SimpleGraph::with_vertices(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return SimpleGraph(GraphKind::plain, "G", std::move(labels));
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  rows_.at(u).set(v);
  rows_.at(v).set(u);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

SimpleGraph build_ag(const IdealLattice& lattice) {
  std::vector<std::string> labels;
  std::vector<std::size_t> origins;
  for (auto i : lattice.proper_nonzero()) {
    if (!is_annihilating(lattice, i)) continue;
    labels.push_back(lattice[i].label());
    origins.push_back(i);
  }
  SimpleGraph g(GraphKind::annihilating_ideal, "AG(" + lattice.ring().name() + ")", std::move(labels),
                origins);
  for (std::size_t u = 0; u < origins.size(); ++u) {
    const std::size_t ann = lattice.annihilator_index(origins[u]);
    for (std::size_t v = u + 1; v < origins.size(); ++v)
      if (lattice.includes(origins[v], ann)) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph build_gamma(const FiniteRing& ring) {
  std::vector<std::string> labels;
  std::vector<std::size_t> origins;
  for (std::size_t a = 1; a < ring.order(); ++a)
    if (is_zero_divisor(ring, static_cast<Index>(a))) {
      labels.push_back(ring.label(static_cast<Index>(a)));
      origins.push_back(a);
    }
  SimpleGraph g(GraphKind::zero_divisor, "Gamma(" + ring.name() + ")", std::move(labels), origins);
  for (std::size_t u = 0; u < origins.size(); ++u)
    for (std::size_t v = u + 1; v < origins.size(); ++v)
      if (ring.mul(static_cast<Index>(origins[u]), static_cast<Index>(origins[v])) == 0) g.add_edge(u, v);
  return g;
}

void export_dot(const SimpleGraph& g, std::ostream& sink) {
  sink << "graph \"" << dot_escape(g.name()) << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    sink << "  n" << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
  for (const auto& [u, v] : g.edges()) sink << "  n" << u << " -- n" << v << ";\n";
  sink << "}\n";
  if (!sink) throw Error("failed to write DOT output for " + g.name());
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream os;
  export_dot(g, os);
  return os.str();
}

}  // namespace anngraph
