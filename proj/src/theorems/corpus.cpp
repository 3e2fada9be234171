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

#include "anngraph/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "anngraph/errors.hpp"
#include "anngraph/theorems.hpp"

namespace anngraph {

namespace {

LinearExpr constant(std::int64_t c) { return LinearExpr{c, {}}; }

LinearExpr with_terms(std::int64_t c, std::vector<Term> terms) { return LinearExpr{c, std::move(terms)}; }

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_powers_upto(std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t q = p; q <= limit; q *= p) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string zn_name(std::size_t m) { return "Z" + std::to_string(m); }

void ensure(RingRegistry& reg, const RingPresentation& p) {
  if (!reg.contains(p.name)) reg.add(p);
}

void ensure_zn(RingRegistry& reg, std::size_t m) {
  ensure(reg, RingPresentation::zn(zn_name(m), static_cast<std::uint32_t>(m)));
}

void ensure_with_helpers(RingRegistry& reg, const RingPresentation& p) {
  if (p.kind == PresentationKind::product)
    for (const auto& c : p.components)
      if (!reg.contains(c)) {
        // Helpers used by the fixed lists are cyclic rings "Z<m>" or F4.
        if (c == "F4") {
          for (const auto& q : algebra_family())
            if (q.name == "F4") ensure(reg, q);
        } else {
          ensure_zn(reg, std::stoul(c.substr(1)));
        }
      }
  ensure(reg, p);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::zn: return "zn";
    case Family::product: return "product";
    case Family::algebra: return "algebra";
    case Family::examples: return "examples";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (auto f : all_families())
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown corpus family: " + std::string(name));
}

std::vector<Family> all_families() { return {Family::zn, Family::product, Family::algebra, Family::examples}; }

RingPresentation chromatic_gap_algebra() {
  return RingPresentation::algebra("AN", 4, {{"x", 2}, {"y", 2}, {"z", 2}},
                                   {{"x", "x", constant(2)},
                                    {"y", "y", constant(2)},
                                    {"z", "z", constant(0)},
                                    {"x", "y", constant(0)},
                                    {"x", "z", constant(0)},
                                    {"y", "z", constant(2)}});
}

std::vector<RingPresentation> algebra_family() {
  return {
      chromatic_gap_algebra(),
      RingPresentation::algebra("Z2[y]/(y^2)", 2, {{"y", 2}}, {{"y", "y", constant(0)}}),
      RingPresentation::algebra("Z4[x]/(x^2)", 4, {{"x", 4}}, {{"x", "x", constant(0)}}),
      RingPresentation::algebra("Z2[x,y]/(x^2,xy,y^2)", 2, {{"x", 2}, {"y", 2}},
                                {{"x", "x", constant(0)}, {"x", "y", constant(0)}, {"y", "y", constant(0)}}),
      RingPresentation::algebra("F4", 2, {{"a", 2}}, {{"a", "a", with_terms(1, {{1, "a"}})}}),
      // a = t, b = t^2 with t^3 = t + 1
      RingPresentation::algebra("F8", 2, {{"a", 2}, {"b", 2}},
                                {{"a", "a", with_terms(0, {{1, "b"}})},
                                 {"a", "b", with_terms(1, {{1, "a"}})},
                                 {"b", "b", with_terms(0, {{1, "a"}, {1, "b"}})}}),
      RingPresentation::product("F4xZ4", {"F4", "Z4"}),
  };
}

std::vector<RingPresentation> algebra_family_with_helpers() {
  RingRegistry reg;
  for (const auto& p : algebra_family()) ensure_with_helpers(reg, p);
  return reg.presentations();
}

std::vector<std::string> worked_example_names() {
  return {"AN", "Z8", "Z27", "Z125", "Z4", "Z2[y]/(y^2)", "Z2xZ4"};
}

std::size_t presentation_order(const RingPresentation& p, const RingRegistry& registry) {
  switch (p.kind) {
    case PresentationKind::zn: return p.modulus;
    case PresentationKind::algebra: {
      std::size_t n = p.modulus;
      for (const auto& g : p.generators) n *= g.additive_order;
      return n;
    }
    case PresentationKind::product: {
      std::size_t n = 1;
      for (const auto& c : p.components) n *= presentation_order(registry.presentation(c), registry);
      return n;
    }
  }
  return 0;
}

RingCorpus generate_corpus(std::size_t max_order, const std::vector<Family>& families, const RingLimits& limits) {
  if (max_order > limits.size_cap)
    throw CapExceeded("max order " + std::to_string(max_order) + " exceeds the size cap " +
                      std::to_string(limits.size_cap));
  RingCorpus corpus;
  corpus.registry = std::make_shared<RingRegistry>(limits);
  corpus.max_order = max_order;
  corpus.families = families;
  auto& reg = *corpus.registry;
  std::map<std::string, std::set<std::string>> tags;

  for (auto f : families) {
    const std::string tag(to_string(f));
    switch (f) {
      case Family::zn:
        for (std::size_t n = 4; n <= max_order; ++n)
          if (!is_prime(n)) {
            ensure_zn(reg, n);
            tags[zn_name(n)].insert(tag);
          }
        break;
      case Family::product: {
        const auto qs = prime_powers_upto(max_order / 2);
        std::vector<std::size_t> pick;
        // Non-decreasing factor sequences of length 2..4.
        std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t order) {
          if (pick.size() >= 2) {
            std::string name;
            for (auto q : pick) {
              ensure_zn(reg, q);
              name += (name.empty() ? "" : "x") + zn_name(q);
            }
            std::vector<std::string> comps;
            for (auto q : pick) comps.push_back(zn_name(q));
            ensure(reg, RingPresentation::product(name, comps));
            tags[name].insert(tag);
          }
          if (pick.size() == 4) return;
          for (std::size_t i = from; i < qs.size() && order * qs[i] <= max_order; ++i) {
            pick.push_back(qs[i]);
            extend(i, order * qs[i]);
            pick.pop_back();
          }
        };
        extend(0, 1);
        break;
      }
      case Family::algebra:
        for (const auto& p : algebra_family()) {
          RingRegistry scratch;
          for (const auto& h : algebra_family_with_helpers()) scratch.add(h);
          if (presentation_order(p, scratch) > max_order) continue;
          ensure_with_helpers(reg, p);
          tags[p.name].insert(tag);
        }
        break;
      case Family::examples:
        for (const auto& name : worked_example_names()) {
          if (name == "AN" || name == "Z2[y]/(y^2)") {
            for (const auto& p : algebra_family())
              if (p.name == name) ensure(reg, p);
          } else if (name == "Z2xZ4") {
            ensure_zn(reg, 2);
            ensure_zn(reg, 4);
            ensure(reg, RingPresentation::product(name, {"Z2", "Z4"}));
          } else {
            ensure_zn(reg, std::stoul(name.substr(1)));
          }
          tags[name].insert(tag);
        }
        break;
    }
  }
  for (const auto& [name, t] : tags) {
    const auto order = presentation_order(reg.presentation(name), reg);
    if (order > limits.size_cap) throw CapExceeded("ring " + name + " exceeds the size cap");
    corpus.entries.push_back({name, order, std::vector<std::string>(t.begin(), t.end())});
  }
  return corpus;
}

std::vector<RingAnalysis> analyze_corpus(const RingCorpus& corpus, const ScanOptions& options) {
  const std::size_t n = corpus.entries.size();
  std::vector<RingAnalysis> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = analyze(corpus.registry->build(corpus.entries[i].name), options.analysis);
        out[i].name = corpus.entries[i].name;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Json corpus_json(const RingCorpus& corpus) {
  Json fam = Json::array();
  for (auto f : corpus.families) fam.push_back(std::string(to_string(f)));
  return {{"max_order", corpus.max_order}, {"families", fam}, {"rings", corpus.entries.size()}};
}

Json scan_clique_chromatic(const RingCorpus& corpus, const std::vector<RingAnalysis>& analyses) {
  Json rings = Json::array(), counterexamples = Json::array(), inconclusive = Json::array();
  Json clique_exceptions = Json::array();
  std::size_t consistent = 0, skipped = 0, clique_le = 0;
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    const auto& a = analyses[i];
    const auto& e = corpus.entries[i];
    const auto v = check_clique_equals_chromatic(a);
    Json row = {{"ring", e.name}, {"order", e.order}, {"tags", e.tags}, {"ag_vertices", a.ag.vertex_count()},
                {"status", std::string(to_string(v.status))}};
    if (v.status != Status::inapplicable) {
      row["clique"] = a.ag_inv.clique.size;
      row["chi"] = a.ag_inv.chromatic.value;
      row["chi_exact"] = a.ag_inv.chromatic.exact;
      row["gamma_clique"] = a.gamma_inv.clique.size;
      if (a.ag_inv.clique.size <= a.gamma_inv.clique.size) {
        ++clique_le;
      } else {
        clique_exceptions.push_back({{"ring", e.name}, {"ag_clique", a.ag_inv.clique.size},
                                     {"gamma_clique", a.gamma_inv.clique.size}});
      }
    }
    switch (v.status) {
      case Status::pass: ++consistent; break;
      case Status::fail: counterexamples.push_back(v.to_json()); break;
      case Status::inconclusive: inconclusive.push_back(e.name); break;
      case Status::inapplicable: ++skipped; break;
    }
    rings.push_back(row);
  }
  return {{"scan", "conjecture-0.1"},
          {"corpus", corpus_json(corpus)},
          {"rings", rings},
          {"counterexamples", counterexamples},
          {"inconclusive", inconclusive},
          {"summary",
           {{"consistent", consistent}, {"counterexamples", counterexamples.size()},
            {"inconclusive", inconclusive.size()}, {"empty_graph", skipped}}},
          {"exploratory",
           {{"ag_clique_at_most_gamma_clique", clique_le}, {"ag_clique_exceeds_gamma_clique", clique_exceptions}}}};
}

Json scan_diameter_gap(const RingCorpus& corpus, const std::vector<RingAnalysis>& analyses) {
  Json hits = Json::array();
  std::map<std::string, std::size_t> pairs;
  std::size_t table_violations = 0;
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    const auto& a = analyses[i];
    if (a.ag.empty() || a.gamma.empty()) continue;
    const auto dg = a.gamma_inv.diameter, da = a.ag_inv.diameter;
    pairs["(" + dg.to_string() + "," + da.to_string() + ")"]++;
    const auto rel = check_diameter_relation(a);
    if (rel.status == Status::fail) ++table_violations;
    if (dg == Extent::finite(2) && da == Extent::finite(3)) {
      const auto [s, t] = diameter_witness(a.ag);
      hits.push_back({{"ring", corpus.entries[i].name},
                      {"gamma_diameter", 2},
                      {"ag_diameter", 3},
                      {"ag_far_pair", {a.ag.label(s), a.ag.label(t)}},
                      {"zr_ideal", a.zr_ideal},
                      {"reduced", a.reduced},
                      {"consistent_with_relation_table", rel.status == Status::pass}});
    }
  }
  Json dist = Json::object();
  for (const auto& [k, n] : pairs) dist[k] = n;
  return {{"scan", "diam-gap"},
          {"corpus", corpus_json(corpus)},
          {"hits", hits},
          {"diameter_pairs", dist},
          {"relation_table_violations", table_violations}};
}

}  // namespace anngraph
