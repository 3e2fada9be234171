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

#include "anngraph/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <tuple>

#include <unistd.h>

namespace anngraph {

std::string_view to_string(GraphSelection g) {
  switch (g) {
    case GraphSelection::ag: return "ag";
    case GraphSelection::gamma: return "gamma";
    case GraphSelection::both: return "both";
  }
  return "?";
}

GraphSelection graph_selection_from_string(std::string_view s) {
  for (auto g : {GraphSelection::ag, GraphSelection::gamma, GraphSelection::both})
    if (to_string(g) == s) return g;
  throw std::invalid_argument("unknown graph selection: " + std::string(s));
}

Json limits_json(const RingLimits& limits, const AnalysisOptions& options) {
  return {{"size_cap", limits.size_cap},
          {"table_limit", limits.table_limit},
          {"ideal_budget", options.ideal_budget},
          {"clique_nodes", options.budgets.clique_nodes},
          {"coloring_nodes", options.budgets.coloring_nodes}};
}

Json analysis_report(const RingAnalysis& a, std::vector<Verdict> verdicts, GraphSelection graphs,
                     const Json& config) {
  const auto& lat = a.lattice;
  Json ideals = Json::array();
  for (const auto& i : lat.ideals()) ideals.push_back({{"label", i.label()}, {"size", i.size()}});
  Json minimal = Json::array();
  for (auto i : a.minimal_primes) minimal.push_back(lat[i].label());

  Json report;
  report["ring"] = a.name;
  report["order"] = a.ring->order();
  report["flags"] = {{"reduced", a.reduced}, {"zr_is_ideal", a.zr_ideal}, {"local", a.local}, {"field", a.field}};
  report["lattice"] = {{"ideals", lat.size()},
                       {"n_ideals", a.nonzero_proper_ideals()},
                       {"minimal_primes", minimal},
                       {"n_minimal_primes", a.minimal_primes.size()},
                       {"nilradical_size", a.nilradical_size},
                       {"members", ideals}};
  report["ag"] = graphs == GraphSelection::gamma ? Json() : invariants_json(a.ag, a.ag_inv);
  report["gamma"] = graphs == GraphSelection::ag ? Json() : invariants_json(a.gamma, a.gamma_inv);
  std::sort(verdicts.begin(), verdicts.end(), [](const Verdict& x, const Verdict& y) {
    return std::tie(x.ring, x.theorem) < std::tie(y.ring, y.theorem);
  });
  report["verdicts"] = Json::array();
  for (const auto& v : verdicts) report["verdicts"].push_back(v.to_json());
  report["version"] = std::string(kVersion);
  report["config"] = config;
  return report;
}

Json verdict_report(std::vector<Verdict> verdicts, const Json& config) {
  std::sort(verdicts.begin(), verdicts.end(), [](const Verdict& x, const Verdict& y) {
    return std::tie(x.ring, x.theorem) < std::tie(y.ring, y.theorem);
  });
  Json list = Json::array(), counts = Json::object(), inconclusive = Json::array(), failures = Json::array();
  for (auto s : {Status::pass, Status::fail, Status::inapplicable, Status::inconclusive})
    counts[std::string(to_string(s))] = 0;
  for (const auto& v : verdicts) {
    list.push_back(v.to_json());
    auto& n = counts[std::string(to_string(v.status))];
    n = n.get<std::size_t>() + 1;
    if (v.status == Status::inconclusive) inconclusive.push_back({{"ring", v.ring}, {"theorem", v.theorem}});
    if (v.status == Status::fail) failures.push_back({{"ring", v.ring}, {"theorem", v.theorem}});
  }
  return {{"verdicts", list},
          {"summary", counts},
          {"failures", failures},
          {"inconclusive", inconclusive},
          {"version", std::string(kVersion)},
          {"config", config}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace anngraph
