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

#include "anngraph/analysis.hpp"

#include <deque>
#include <limits>

#include "anngraph/errors.hpp"

namespace anngraph {

RingAnalysis analyze(const RingPtr& ring, const AnalysisOptions& options) {
  RingAnalysis a;
  a.name = ring->name();
  a.ring = ring;
  a.lattice = enumerate_ideals(ring, options.ideal_budget);
  const auto& lat = a.lattice;

  a.reduced = is_reduced(*ring);
  a.field = lat.size() == 2;
  a.zr_ideal = zr_is_ideal(*ring);
  a.local = is_local(lat);
  a.primes = prime_indices(lat);
  a.minimal_primes = minimal_prime_indices(lat);
  a.nilradical_size = nilradical(lat).size();
  if (a.zr_ideal) a.zr_index = lat.find(zero_divisor_set(*ring));

  if (a.reduced && a.minimal_primes.size() == 2) {
    const auto& p1 = lat[a.minimal_primes[0]];
    const auto& p2 = lat[a.minimal_primes[1]];
    a.two_fields = ideal_intersect(p1, p2).is_zero() && is_field(*quotient(p1)) && is_field(*quotient(p2));
  }

  a.ag = build_ag(lat);
  a.ag_inv = compute_invariants(a.ag, options.budgets);
  if (options.with_gamma) {
    a.gamma = build_gamma(*ring);
    a.gamma_inv = compute_invariants(a.gamma, options.budgets);
  }
  return a;
}

Json extent_json(const Extent& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

Json invariants_json(const SimpleGraph& g, const InvariantReport& r) {
  Json j;
  j["name"] = g.name();
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["applicable"] = r.applicable;
  if (!r.applicable) return j;
  j["connected"] = r.connected;
  j["diameter"] = extent_json(r.diameter);
  j["girth"] = extent_json(r.girth);
  j["clique"] = r.clique.size;
  Json witness = Json::array();
  for (auto v : r.clique.witness) witness.push_back(g.label(v));
  j["clique_witness"] = witness;
  j["chi"] = r.chromatic.value;
  j["chi_exact"] = r.chromatic.exact;
  j["chi_lower"] = r.chromatic.lower;
  j["chi_upper"] = r.chromatic.upper;
  j["complete"] = r.complete;
  j["bipartite"] = r.parts.bipartite;
  j["complete_bipartite"] = r.complete_bipartite;
  j["star"] = r.star.star;
  if (r.star.center) j["star_center"] = g.label(*r.star.center);
  return j;
}

std::pair<std::size_t, std::size_t> diameter_witness(const SimpleGraph& g) {
  if (g.empty()) throw EmptyGraph("diameter witness of an empty graph");
  const std::size_t n = g.vertex_count();
  std::pair<std::size_t, std::size_t> best{0, 0};
  std::size_t best_d = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](std::size_t w) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      });
    }
    for (std::size_t t = s + 1; t < n; ++t)
      if (dist[t] != std::numeric_limits<std::size_t>::max() && dist[t] > best_d) {
        best_d = dist[t];
        best = {s, t};
      }
  }
  return best;
}

std::optional<bool> chromatic_equals(const ColoringResult& c, std::size_t k) {
  if (c.exact) return c.value == k;
  if (k < c.lower || k > c.upper) return false;
  return std::nullopt;
}

}  // namespace anngraph
