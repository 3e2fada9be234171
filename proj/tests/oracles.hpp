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

// Brute-force reference implementations used only by tests. None of these
// call into the library's ideal, lattice, or graph-invariant code; they only
// use ring arithmetic and graph adjacency.

#ifndef ANNGRAPH_TESTS_ORACLES_HPP_
#define ANNGRAPH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "anngraph/graph.hpp"
#include "anngraph/ring.hpp"

namespace oracle {

using anngraph::FiniteRing;
using anngraph::Index;
using anngraph::SimpleGraph;

using Members = std::vector<bool>;

/// Smallest subset containing `seed` and 0, closed under + and under
/// multiplication by every ring element. Naive fixpoint.
inline Members ideal_closure(const FiniteRing& r, const std::vector<Index>& seed) {
  const std::size_t n = r.order();
  Members in(n, false);
  std::vector<Index> list{0};
  in[0] = true;
  auto push = [&](Index x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  for (auto s : seed) push(s);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t before = list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) push(r.add(list[i], list[j]));
      for (std::size_t x = 0; x < n; ++x) push(r.mul(static_cast<Index>(x), list[i]));
    }
    grew = list.size() != before;
  }
  return in;
}

inline Members additive_closure(const FiniteRing& r, Members in) {
  std::vector<Index> list;
  for (std::size_t x = 0; x < in.size(); ++x)
    if (in[x]) list.push_back(static_cast<Index>(x));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Index s = r.add(list[i], list[j]);
      if (!in[s]) {
        in[s] = true;
        list.push_back(s);
      }
    }
  return in;
}

/// All ideals, found by enumerating every additive subgroup and keeping the
/// ones closed under external multiplication.
inline std::set<Members> all_ideals(const FiniteRing& r) {
  const std::size_t n = r.order();
  Members zero(n, false);
  zero[0] = true;
  std::set<Members> subgroups{zero};
  std::vector<Members> queue{zero};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Members h = queue[q];
    for (std::size_t a = 0; a < n; ++a) {
      if (h[a]) continue;
      Members k = h;
      k[a] = true;
      k = additive_closure(r, std::move(k));
      if (subgroups.insert(k).second) queue.push_back(k);
    }
  }
  std::set<Members> ideals;
  for (const auto& h : subgroups) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      if (h[x])
        for (std::size_t y = 0; y < n && closed; ++y)
          if (!h[r.mul(static_cast<Index>(y), static_cast<Index>(x))]) closed = false;
    if (closed) ideals.insert(h);
  }
  return ideals;
}

/// Maximum clique size by checking every vertex subset (V <= 24).
inline std::size_t clique_number(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("oracle clique limited to 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (g.adjacent(v, w)) nbr[v] |= 1U << w;
  std::vector<bool> clique(std::size_t{1} << n, false);
  clique[0] = true;
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const unsigned v = static_cast<unsigned>(__builtin_ctz(s));
    const std::uint32_t rest = s & (s - 1);
    clique[s] = clique[rest] && (rest & ~nbr[v]) == 0;
    if (clique[s]) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

namespace detail {

constexpr std::array<std::uint64_t, 5> kMersenne = {(1ULL << 61) - 1, (1ULL << 31) - 1, (1ULL << 19) - 1,
                                                    (1ULL << 17) - 1, (1ULL << 13) - 1};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace detail

/// Chromatic number by inclusion-exclusion over all vertex subsets:
/// c_k = sum_S (-1)^{|V \ S|} i(S)^k counts k-tuples of independent sets
/// covering V, and chi = min k with c_k != 0. c_k is evaluated modulo 2^64
/// and five Mersenne primes; a zero residue vector proves c_k = 0 only while
/// |c_k| is below half their product, which is checked.
inline std::size_t chromatic_number(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 22) throw std::invalid_argument("oracle chromatic number limited to 22 vertices");
  std::vector<std::uint32_t> closed(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = 1U << v;
    for (std::size_t w = 0; w < n; ++w)
      if (g.adjacent(v, w)) closed[v] |= 1U << w;
  }
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  std::vector<std::uint32_t> indep(std::size_t{1} << n);
  indep[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const unsigned v = static_cast<unsigned>(__builtin_ctz(s));
    indep[s] = indep[s & ~(1U << v)] + indep[s & ~closed[v]];
  }
  // log2 of the product of all moduli, minus one bit for the sign.
  const double capacity = 64 + 61 + 31 + 19 + 17 + 13 - 1;
  const double log_total = std::log2(static_cast<double>(indep[full]));
  for (std::size_t k = 1; k <= n; ++k) {
    if (static_cast<double>(n) + static_cast<double>(k) * log_total >= capacity)
      throw std::runtime_error("oracle chromatic number: residues cannot certify k=" + std::to_string(k));
    std::uint64_t wrap = 0;
    std::array<std::uint64_t, 5> res{};
    for (std::uint32_t s = 0; s <= full; ++s) {
      const bool negative = ((n - static_cast<std::size_t>(__builtin_popcount(s))) & 1U) != 0;
      std::uint64_t p = 1;
      for (std::size_t e = 0; e < k; ++e) p *= indep[s];
      wrap = negative ? wrap - p : wrap + p;
      for (std::size_t m = 0; m < detail::kMersenne.size(); ++m) {
        const std::uint64_t mod = detail::kMersenne[m];
        std::uint64_t q = 1;
        const std::uint64_t base = indep[s] % mod;
        for (std::size_t e = 0; e < k; ++e) q = detail::mulmod(q, base, mod);
        res[m] = negative ? (res[m] + mod - q) % mod : (res[m] + q) % mod;
      }
      if (s == full) break;
    }
    bool zero = wrap == 0;
    for (auto r : res) zero = zero && r == 0;
    if (!zero) return k;
  }
  return n;
}

/// Chromatic number by trying every assignment of k colours (tiny graphs).
inline std::size_t chromatic_number_by_assignment(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 9) throw std::invalid_argument("assignment oracle limited to 9 vertices");
  const auto edges = g.edges();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> c(n, 0);
    while (true) {
      bool ok = true;
      for (const auto& [u, v] : edges)
        if (c[u] == c[v]) ok = false;
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

/// All-pairs distances by Floyd-Warshall; max over pairs, or SIZE_MAX when
/// disconnected.
inline std::size_t diameter(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (std::size_t w = 0; w < n; ++w)
      if (g.adjacent(v, w)) d[v][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return std::numeric_limits<std::size_t>::max();
      best = std::max(best, d[i][j]);
    }
  return best;
}

/// Shortest cycle: for each edge (u,v), 1 + shortest u-v path avoiding that
/// edge. SIZE_MAX when acyclic.
inline std::size_t girth(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [u, v] : g.edges()) {
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> queue{u};
    dist[u] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t x = queue[q];
      for (std::size_t y = 0; y < n; ++y) {
        if (!g.adjacent(x, y) || dist[y] != std::numeric_limits<std::size_t>::max()) continue;
        if ((x == u && y == v) || (x == v && y == u)) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[v] != std::numeric_limits<std::size_t>::max()) best = std::min(best, dist[v] + 1);
  }
  return best;
}

}  // namespace oracle

#endif  // ANNGRAPH_TESTS_ORACLES_HPP_
