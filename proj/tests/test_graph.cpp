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

#include <doctest.h>

#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "anngraph/errors.hpp"
#include "anngraph/graph.hpp"
#include "anngraph/invariants.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace anngraph;
using namespace fixtures;

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t as_size(const Extent& e) { return e.is_infinite() ? kNone : e.value(); }

SimpleGraph ag_of(const RingPtr& r) { return build_ag(enumerate_ideals(r)); }

SimpleGraph random_graph(std::mt19937& rng, std::size_t n, double density) {
  auto g = SimpleGraph::with_vertices(n);
  std::bernoulli_distribution coin(density);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::size_t vertex_of(const SimpleGraph& g, const IdealLattice& lat, const Ideal& ideal) {
  const auto idx = lat.index_of(ideal);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.origin(v) == idx) return v;
  FAIL("ideal is not a vertex");
  return 0;
}

}  // namespace

TEST_CASE("annihilating-ideal graph of Z2 x Z4") {
  auto r = product_of({2, 4});
  auto lat = enumerate_ideals(r);
  auto g = build_ag(lat);
  CHECK(g.name() == "AG(Z2xZ4)");
  REQUIRE(g.vertex_count() == 4);
  auto el = [&](std::uint32_t a, std::uint32_t b) { return r->encode(std::vector<std::uint32_t>{a, b}); };
  const auto a = vertex_of(g, lat, principal_ideal(r, el(1, 0)));
  const auto b = vertex_of(g, lat, principal_ideal(r, el(0, 2)));
  const auto c = vertex_of(g, lat, principal_ideal(r, el(0, 1)));
  const auto d = vertex_of(g, lat, principal_ideal(r, el(1, 2)));
  // (I1 x I2)(J1 x J2) = I1J1 x I2J2, so A-B, A-C and B-D are the only zero products.
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(a, b));
  CHECK(g.adjacent(a, c));
  CHECK(g.adjacent(b, d));
  CHECK(diameter(g) == Extent::finite(3));
  CHECK(girth(g).is_infinite());

  auto gamma = build_gamma(*r);
  CHECK(gamma.vertex_count() == 5);
  // Gamma(Z2 x Z4) is a tree: (1,0) meets (0,1), (0,2), (0,3); (0,2) meets (1,2).
  CHECK(gamma.edge_count() == 4);
  CHECK(as_size(girth(gamma)) == oracle::girth(gamma));
  CHECK(girth(gamma).is_infinite());
  CHECK(diameter(gamma) == Extent::finite(3));
}

TEST_CASE("small annihilating-ideal graphs") {
  auto z4 = ag_of(make_zn(4));
  REQUIRE(z4.vertex_count() == 1);
  CHECK(z4.label(0) == "(2)");
  CHECK(diameter(z4) == Extent::finite(0));
  CHECK(to_dot(z4) == "graph \"AG(Z4)\" {\n  n0 [label=\"(2)\"];\n}\n");

  auto z16 = make_zn(16);
  auto l16 = enumerate_ideals(z16);
  auto g16 = build_ag(l16);
  CHECK(g16.vertex_count() == 3);
  auto s = star_shape(g16);
  CHECK(s.star);
  CHECK_FALSE(s.degenerate);
  REQUIRE(s.center.has_value());
  CHECK(g16.label(*s.center) == "(8)");
  CHECK(diameter(g16) == Extent::finite(2));
  CHECK(girth(g16).is_infinite());

  auto g6 = ag_of(product_of({2, 3}));
  CHECK(g6.vertex_count() == 2);
  CHECK(is_complete_bipartite(g6));
  CHECK(is_complete(g6));
  CHECK(diameter(g6) == Extent::finite(1));

  auto g30 = ag_of(product_of({2, 3, 5}));
  CHECK(girth(g30) == Extent::finite(3));
  CHECK_FALSE(is_bipartite(g30));

  auto g27 = ag_of(make_zn(27));
  CHECK(chromatic_number(g27).value == 2);
  CHECK(chromatic_number(g27).value == oracle::chromatic_number(g27));
  auto gamma27 = build_gamma(*make_zn(27));
  CHECK(gamma27.vertex_count() == 8);
  CHECK(oracle::chromatic_number(gamma27) == 3);
  CHECK(chromatic_number(gamma27).value == 3);
}

TEST_CASE("graphs of the 32-element algebra") {
  auto r = make_algebra(four_by_three());
  auto lat = enumerate_ideals(r);
  auto ag = build_ag(lat);
  CHECK(ag.vertex_count() == 16);
  auto cl = max_clique(ag);
  CHECK(cl.size == 4);
  CHECK(cl.size == oracle::clique_number(ag));
  CHECK(is_clique(ag, cl.witness));
  auto chi = chromatic_number(ag);
  CHECK(chi.exact);
  CHECK(chi.value == 4);
  CHECK(chi.value == oracle::chromatic_number(ag));
  CHECK(is_proper_coloring(ag, chi.coloring));

  // the clique {(2), (x), (y), (y+z)}
  std::vector<std::size_t> listed;
  for (const char* s : {"2", "x", "y", "y+z"}) listed.push_back(vertex_of(ag, lat, principal_ideal(r, *r->find_label(s))));
  CHECK(is_clique(ag, listed));

  auto gamma = build_gamma(*r);
  CHECK(gamma.vertex_count() == 15);
  CHECK(max_clique(gamma).size == 4);
  CHECK(oracle::clique_number(gamma) == 4);
  auto chig = chromatic_number(gamma);
  CHECK(chig.exact);
  CHECK(chig.value == 5);
  CHECK(oracle::chromatic_number(gamma) == 5);

  std::ostringstream os;
  export_dot(ag, os);
  const auto text = os.str();
  std::size_t nodes = 0, edges = 0;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    nodes += line.find("[label=") != std::string::npos;
    edges += line.find(" -- ") != std::string::npos;
  }
  CHECK(nodes == 16);
  CHECK(edges == ag.edge_count());
}

TEST_CASE("empty graphs") {
  auto f4 = make_algebra(fixtures::f4());
  auto g = build_gamma(*f4);
  CHECK(g.empty());
  CHECK(to_dot(g) == "graph \"Gamma(F4)\" {\n}\n");
  CHECK(ag_of(f4).empty());
  CHECK_THROWS_AS(diameter(g), EmptyGraph);
  CHECK_THROWS_AS(girth(g), EmptyGraph);
  auto rep = compute_invariants(g);
  CHECK_FALSE(rep.applicable);
  CHECK(rep.vertices == 0);
}

TEST_CASE("graph construction guards") {
  auto g = SimpleGraph::with_vertices(3);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(SimpleGraph(GraphKind::plain, "dup", {"a", "a"}));
  std::ostringstream bad;
  bad.setstate(std::ios::badbit);
  CHECK_THROWS_AS(export_dot(g, bad), Error);
}

TEST_CASE("budgets") {
  std::mt19937 rng(99);
  auto g = random_graph(rng, 120, 0.5);
  CHECK_THROWS_AS(max_clique(g, 10), BudgetExceeded);
  auto c = chromatic_number(g, 10, 2);
  CHECK(c.lower <= c.upper);
  CHECK(is_proper_coloring(g, c.coloring));
  if (!c.exact) CHECK(c.value == c.upper);
}

TEST_CASE("property: invariants agree with brute force on random graphs") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<std::size_t> size(1, 16);
  std::uniform_real_distribution<double> dens(0.05, 0.9);
  for (int trial = 0; trial < 250; ++trial) {
    auto g = random_graph(rng, size(rng), dens(rng));
    CAPTURE(to_dot(g));
    const auto cl = max_clique(g);
    CHECK(cl.size == oracle::clique_number(g));
    CHECK(is_clique(g, cl.witness));
    const auto chi = chromatic_number(g);
    REQUIRE(chi.exact);
    CHECK(chi.value == oracle::chromatic_number(g));
    CHECK(is_proper_coloring(g, chi.coloring));
    if (g.vertex_count() <= 8) CHECK(chi.value == oracle::chromatic_number_by_assignment(g));
    CHECK(cl.size <= chi.value);
    CHECK(as_size(diameter(g)) == oracle::diameter(g));
    CHECK(is_connected(g) == (oracle::diameter(g) != kNone));
    CHECK(as_size(girth(g)) == oracle::girth(g));
    CHECK(is_bipartite(g) == (chi.value <= 2));
    if (is_star(g)) CHECK(is_complete_bipartite(g));
    if (is_complete_bipartite(g)) CHECK(is_bipartite(g));
    CHECK(is_complete(g) == (cl.size == g.vertex_count()));
    const auto rep = compute_invariants(g);
    CHECK(rep.applicable);
    CHECK(rep.chromatic.value == chi.value);
  }
}

TEST_CASE("property: zero-divisor and annihilating-ideal graphs agree with brute force") {
  std::vector<RingPtr> rings{make_zn(8),          make_zn(12),          make_zn(18),
                             make_zn(36),         product_of({2, 4}),   product_of({2, 2, 2}),
                             product_of({4, 4}),  product_of({2, 9}),   make_algebra(dual_numbers(4, 4)),
                             make_algebra(four_by_three())};
  for (const auto& r : rings) {
    CAPTURE(r->name());
    for (const auto& g : {ag_of(r), build_gamma(*r)}) {
      if (g.empty() || g.vertex_count() > 20) continue;
      CHECK(max_clique(g).size == oracle::clique_number(g));
      CHECK(chromatic_number(g).value == oracle::chromatic_number(g));
      CHECK(as_size(diameter(g)) == oracle::diameter(g));
      CHECK(as_size(girth(g)) == oracle::girth(g));
      // both graphs of a finite ring are connected with diameter at most 3
      CHECK(is_connected(g));
      CHECK(diameter(g).value() <= 3);
    }
  }
}
