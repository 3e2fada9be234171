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

#include "anngraph/invariants.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "anngraph/errors.hpp"

namespace anngraph {

namespace {

void require_vertices(const SimpleGraph& g, const char* what) {
  if (g.empty()) throw EmptyGraph(std::string(what) + " is undefined for the empty graph " + g.name());
}

// Vertices with identical open neighbourhoods are non-adjacent and
// interchangeable for both cliques and colourings; collapse each class to
// its lowest member.
struct TwinQuotient {
  std::vector<Bitset> rows;
  std::vector<std::size_t> rep;       // class -> lowest original vertex
  std::vector<std::size_t> class_of;  // original vertex -> class
};

TwinQuotient merge_false_twins(const SimpleGraph& g) {
  TwinQuotient q;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  q.class_of.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = seen.emplace(g.neighbors(v), q.rep.size());
    if (inserted) q.rep.push_back(v);
    q.class_of[v] = it->second;
  }
  const std::size_t m = q.rep.size();
  q.rows.assign(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (g.adjacent(q.rep[a], q.rep[b])) q.rows[a].set(b);
  return q;
}

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& adj, std::uint64_t budget) : adj_(adj), budget_(budget) {}

  void run() {
    Bitset all(adj_.size());
    all.set_all();
    if (all.any()) expand(all);
  }
  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(Bitset cand) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("clique search exceeded " + std::to_string(budget_) + " nodes");
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    Bitset uncolored = cand;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        q.reset(v);
        q -= adj_[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bitset next = cand & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      cand.reset(v);
    }
  }

  const std::vector<Bitset>& adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

struct BudgetOut {};

class Colorer {
 public:
  Colorer(const std::vector<Bitset>& adj, std::uint64_t budget) : adj_(adj), n_(adj.size()), budget_(budget) {
    for (const auto& r : adj_) degree_.push_back(r.count());
  }

  std::vector<std::size_t> dsatur() {
    std::vector<std::size_t> color(n_, kNone);
    std::vector<std::vector<bool>> seen(n_);
    std::vector<std::size_t> sat(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      const std::size_t v = pick(color, sat);
      std::size_t c = 0;
      while (c < seen[v].size() && seen[v][c]) ++c;
      color[v] = c;
      adj_[v].for_each([&](std::size_t w) {
        if (seen[w].size() <= c) seen[w].resize(c + 1, false);
        if (!seen[w][c]) {
          seen[w][c] = true;
          ++sat[w];
        }
      });
    }
    return color;
  }

  /// k-colouring or empty; throws BudgetOut.
  std::vector<std::size_t> try_k(std::size_t k) {
    k_ = k;
    color_.assign(n_, kNone);
    sat_.assign(n_, 0);
    counts_.assign(n_ * k, 0);
    if (search(0, 0)) return color_;
    return {};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t pick(const std::vector<std::size_t>& color, const std::vector<std::size_t>& sat) const {
    std::size_t best = kNone;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color[v] != kNone) continue;
      if (best == kNone || sat[v] > sat[best] || (sat[v] == sat[best] && degree_[v] > degree_[best])) best = v;
    }
    return best;
  }

  bool search(std::size_t colored, std::size_t used) {
    if (colored == n_) return true;
    if (++nodes_ > budget_) throw BudgetOut{};
    const std::size_t v = pick(color_, sat_);
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (counts_[v * k_ + c]) continue;
      assign(v, c);
      if (search(colored + 1, std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    adj_[v].for_each([&](std::size_t w) {
      if (counts_[w * k_ + c]++ == 0) ++sat_[w];
    });
  }
  void unassign(std::size_t v, std::size_t c) {
    color_[v] = kNone;
    adj_[v].for_each([&](std::size_t w) {
      if (--counts_[w * k_ + c] == 0) --sat_[w];
    });
  }

  const std::vector<Bitset>& adj_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> degree_;
  std::size_t k_ = 0;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> sat_;
  std::vector<std::uint32_t> counts_;
};

}  // namespace

bool is_connected(const SimpleGraph& g) {
  if (g.empty()) return true;
  Bitset seen(g.vertex_count());
  seen.set(0);
  Bitset frontier = seen;
  while (frontier.any()) {
    Bitset next(g.vertex_count());
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == g.vertex_count();
}

Extent diameter(const SimpleGraph& g) {
  require_vertices(g, "diameter");
  const std::size_t n = g.vertex_count();
  std::size_t diam = 0;
  for (std::size_t s = 0; s < n; ++s) {
    Bitset seen(n);
    seen.set(s);
    Bitset frontier = seen;
    std::size_t ecc = 0;
    while (true) {
      Bitset next(n);
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
      next -= seen;
      if (next.none()) break;
      ++ecc;
      seen |= next;
      frontier = std::move(next);
    }
    if (seen.count() != n) return Extent::infinite();
    diam = std::max(diam, ecc);
  }
  return Extent::finite(diam);
}

Extent girth(const SimpleGraph& g) {
  require_vertices(g, "girth");
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> parent(n);
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  for (std::size_t root = 0; root < n && best > 3; ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    std::fill(parent.begin(), parent.end(), kUnset);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      g.neighbors(u).for_each([&](std::size_t w) {
        if (dist[w] == kUnset) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? Extent::infinite() : Extent::finite(best);
}

CliqueResult max_clique(const SimpleGraph& g, std::uint64_t node_budget) {
  CliqueResult result;
  if (g.empty()) return result;
  const TwinQuotient q = merge_false_twins(g);
  const std::size_t m = q.rows.size();

  // Search in degree-descending order (ties: lower vertex first).
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return q.rows[a].count() > q.rows[b].count(); });
  std::vector<Bitset> adj(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (q.rows[perm[i]].test(perm[j])) adj[i].set(j);

  CliqueSearch search(adj, node_budget);
  search.run();
  for (auto v : search.best()) result.witness.push_back(q.rep[perm[v]]);
  std::sort(result.witness.begin(), result.witness.end());
  result.size = result.witness.size();
  result.nodes = search.nodes();
  return result;
}

std::size_t clique_number(const SimpleGraph& g) { return max_clique(g).size; }

ColoringResult chromatic_number(const SimpleGraph& g, std::uint64_t node_budget,
                                std::optional<std::size_t> clique_hint) {
  ColoringResult result;
  if (g.empty()) {
    result.exact = true;
    return result;
  }
  const TwinQuotient q = merge_false_twins(g);
  Colorer colorer(q.rows, node_budget);

  std::vector<std::size_t> best = colorer.dsatur();
  result.upper = *std::max_element(best.begin(), best.end()) + 1;
  if (clique_hint) {
    result.lower = *clique_hint;
  } else {
    try {
      result.lower = max_clique(g, node_budget).size;
    } catch (const BudgetExceeded&) {
      result.lower = g.edge_count() ? 2 : 1;
    }
  }
  result.exact = result.lower == result.upper;
  try {
    for (std::size_t k = result.lower; k < result.upper; ++k) {
      auto c = colorer.try_k(k);
      if (!c.empty()) {
        best = std::move(c);
        result.upper = k;
        break;
      }
      result.lower = k + 1;
    }
    result.exact = true;
  } catch (const BudgetOut&) {
    result.exact = false;
  }
  if (result.exact) result.lower = result.upper;
  result.value = result.upper;
  result.nodes = colorer.nodes();
  result.coloring.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) result.coloring[v] = best[q.class_of[v]];
  return result;
}

bool is_proper_coloring(const SimpleGraph& g, const std::vector<std::size_t>& coloring) {
  if (coloring.size() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return true;
}

bool is_clique(const SimpleGraph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

Bipartition bipartition(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr int kUnset = -1;
  std::vector<int> side(n, kUnset);
  Bipartition out;
  out.bipartite = true;
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](std::size_t w) {
        if (side[w] == kUnset) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          out.bipartite = false;
        }
      });
    }
  }
  if (!out.bipartite) return out;
  for (std::size_t v = 0; v < n; ++v) (side[v] == 0 ? out.left : out.right).push_back(v);
  return out;
}

bool is_complete(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - (n ? 1 : 0)) / 2;
}

bool is_bipartite(const SimpleGraph& g) { return bipartition(g).bipartite; }

bool is_complete_bipartite(const SimpleGraph& g) {
  if (g.vertex_count() == 1) return true;
  const Bipartition b = bipartition(g);
  return b.bipartite && !b.left.empty() && !b.right.empty() && g.edge_count() == b.left.size() * b.right.size();
}

StarShape star_shape(const SimpleGraph& g) {
  StarShape s;
  if (g.vertex_count() == 1) {
    s.star = true;
    s.degenerate = true;
    s.center = 0;
    return s;
  }
  if (!is_complete_bipartite(g)) return s;
  const Bipartition b = bipartition(g);
  if (b.left.size() == 1 && b.right.size() == 1) {
    s.star = true;
    s.center = std::min(b.left[0], b.right[0]);
  } else if (b.left.size() == 1) {
    s.star = true;
    s.center = b.left[0];
  } else if (b.right.size() == 1) {
    s.star = true;
    s.center = b.right[0];
  }
  return s;
}

bool is_star(const SimpleGraph& g) { return star_shape(g).star; }

InvariantReport compute_invariants(const SimpleGraph& g, const InvariantBudgets& budgets) {
  InvariantReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  if (g.empty()) {
    r.chromatic.exact = true;
    return r;
  }
  r.applicable = true;
  r.connected = is_connected(g);
  r.diameter = diameter(g);
  r.girth = girth(g);
  r.clique = max_clique(g, budgets.clique_nodes);
  r.chromatic = chromatic_number(g, budgets.coloring_nodes, r.clique.size);
  r.complete = is_complete(g);
  r.parts = bipartition(g);
  r.complete_bipartite = is_complete_bipartite(g);
  r.star = star_shape(g);
  if (r.clique.size > r.chromatic.upper || (r.chromatic.exact && r.clique.size > r.chromatic.value))
    throw InvariantViolation("clique number exceeds chromatic bound in " + g.name());
  if ((r.star.star && !r.complete_bipartite) || (r.complete_bipartite && !r.parts.bipartite))
    throw InvariantViolation("shape flags inconsistent in " + g.name());
  return r;
}

}  // namespace anngraph
