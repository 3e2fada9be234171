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

#include "anngraph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <ostream>
#include <regex>
#include <sstream>

#include "anngraph/corpus.hpp"
#include "anngraph/errors.hpp"
#include "anngraph/report.hpp"
#include "anngraph/spec_format.hpp"
#include "anngraph/theorems.hpp"

namespace anngraph {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::size_t size_cap = RingLimits{}.size_cap;
  std::size_t ideal_budget = AnalysisOptions{}.ideal_budget;
  std::uint64_t clique_nodes = InvariantBudgets{}.clique_nodes;
  std::uint64_t coloring_nodes = InvariantBudgets{}.coloring_nodes;
  unsigned jobs = 1;

  RingLimits limits() const {
    RingLimits l;
    l.size_cap = size_cap;
    return l;
  }
  AnalysisOptions analysis() const {
    AnalysisOptions o;
    o.ideal_budget = ideal_budget;
    o.budgets.clique_nodes = clique_nodes;
    o.budgets.coloring_nodes = coloring_nodes;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--size-cap", c.size_cap, "Largest ring order accepted")->capture_default_str();
  cmd->add_option("--ideal-budget", c.ideal_budget, "Most ideals enumerated per ring")->capture_default_str();
  cmd->add_option("--clique-budget", c.clique_nodes, "Search nodes for maximum clique")->capture_default_str();
  cmd->add_option("--coloring-budget", c.coloring_nodes, "Search nodes for exact colouring")
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads for per-ring work")->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  try {
    write_atomic(path, contents);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

std::shared_ptr<RingRegistry> registry_of(const std::vector<RingPresentation>& ps, const RingLimits& limits) {
  auto reg = std::make_shared<RingRegistry>(limits);
  for (const auto& p : ps) reg->add(p);
  return reg;
}

std::string graph_line(const SimpleGraph& g, const InvariantReport& r) {
  std::ostringstream s;
  s << "  " << g.name() << ": ";
  if (!r.applicable) {
    s << "no vertices, invariants not applicable";
    return s.str();
  }
  s << r.vertices << " vertices, " << r.edges << " edges, diameter " << r.diameter.to_string() << ", girth "
    << r.girth.to_string() << ", clique " << r.clique.size << ", chi ";
  if (r.chromatic.exact) {
    s << r.chromatic.value;
  } else {
    s << "in [" << r.chromatic.lower << "," << r.chromatic.upper << "]";
  }
  return s.str();
}

void print_verdict_summary(std::ostream& out, const Json& report) {
  const auto& sum = report["summary"];
  out << "verdicts: " << sum["pass"] << " pass, " << sum["fail"] << " fail, " << sum["inapplicable"]
      << " inapplicable, " << sum["inconclusive"] << " inconclusive\n";
  std::size_t shown = 0;
  for (const auto& f : report["failures"]) {
    if (shown++ == 20) {
      out << "  ... " << report["failures"].size() - 20 << " more failures in the report\n";
      break;
    }
    out << "  FAIL " << f["theorem"].get<std::string>() << " on " << f["ring"].get<std::string>() << "\n";
  }
  for (const auto& f : report["inconclusive"])
    out << "  INCONCLUSIVE " << f["theorem"].get<std::string>() << " on " << f["ring"].get<std::string>() << "\n";
}

bool has_fail(const std::vector<Verdict>& vs) {
  return std::any_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.status == Status::fail; });
}

std::vector<Family> parse_families(const std::string& list, char sep) {
  std::vector<Family> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(family_from_string(item));
  if (out.empty()) throw std::invalid_argument("empty family list");
  return out;
}

struct CorpusSelector {
  std::size_t max_order = 0;
  std::vector<Family> families = all_families();
};

/// "max-order=N[,families=a+b+...]"
CorpusSelector parse_corpus_selector(const std::string& text) {
  CorpusSelector sel;
  bool have_order = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("corpus selector item without '=': " + item);
    const auto key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "max-order") {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("max-order must be a positive integer");
      sel.max_order = std::stoul(value);
      have_order = true;
    } else if (key == "families") {
      sel.families = parse_families(value, '+');
    } else {
      throw std::invalid_argument("unknown corpus selector key: " + key);
    }
  }
  if (!have_order) throw std::invalid_argument("corpus selector needs max-order=N");
  return sel;
}

// analyze ------------------------------------------------------------------

struct AnalyzeArgs {
  std::string spec;
  std::string ring;
  std::string graph = "both";
  std::string dot;
  std::string json;
  std::vector<std::string> theorems;
  CommonOptions common;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  const auto selection = graph_selection_from_string(args.graph);
  const auto limits = args.common.limits();
  const auto presentations =
      args.spec.empty() ? builtin_presentations({args.ring}) : parse_spec(read_file(args.spec));
  const auto registry = registry_of(presentations, limits);
  if (!registry->contains(args.ring)) throw PresentationError("unknown ring '" + args.ring + "'");
  const auto ids = args.theorems.empty() ? std::vector<std::string>{} : resolve_theorem_ids(args.theorems);

  auto options = args.common.analysis();
  options.with_gamma = selection != GraphSelection::ag || !ids.empty();
  auto a = analyze(registry->build(args.ring), options);
  a.name = args.ring;
  const auto verdicts = run_ring_checks(a, ids);

  const Json config = {{"command", "analyze"},
                       {"spec", format_spec(registry->closure(args.ring))},
                       {"limits", limits_json(limits, options)},
                       {"graph", std::string(to_string(selection))},
                       {"theorems", ids}};
  const auto report = analysis_report(a, verdicts, selection, config);
  std::string dot;
  if (selection != GraphSelection::gamma) dot += to_dot(a.ag);
  if (selection != GraphSelection::ag) dot += to_dot(a.gamma);

  if (!args.json.empty()) write_file(args.json, render_json(report));
  if (!args.dot.empty()) write_file(args.dot, dot);

  out << "ring " << a.name << ": order " << a.ring->order() << ", " << a.lattice.size() << " ideals ("
      << a.nonzero_proper_ideals() << " nonzero proper), " << a.minimal_primes.size() << " minimal primes, "
      << (a.reduced ? "reduced" : "not reduced") << ", Z(R) " << (a.zr_ideal ? "is" : "is not")
      << " an ideal\n";
  if (selection != GraphSelection::gamma) out << graph_line(a.ag, a.ag_inv) << "\n";
  if (selection != GraphSelection::ag) out << graph_line(a.gamma, a.gamma_inv) << "\n";
  for (const auto& v : verdicts) out << "  " << v.theorem << ": " << to_string(v.status) << "\n";
  return has_fail(verdicts) ? kExitViolation : kExitOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string spec;
  std::string corpus;
  std::vector<std::string> rings;
  std::vector<std::string> theorems{"all"};
  std::string json;
  CommonOptions common;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const auto ids = resolve_theorem_ids(args.theorems);
  const auto limits = args.common.limits();
  RingCorpus corpus;
  Json source;
  if (!args.corpus.empty()) {
    if (!args.spec.empty() || !args.rings.empty())
      throw std::invalid_argument("--corpus cannot be combined with --spec or ring names");
    const auto sel = parse_corpus_selector(args.corpus);
    corpus = generate_corpus(sel.max_order, sel.families, limits);
    source = {{"corpus", corpus_json(corpus)}};
  } else {
    const auto presentations =
        args.spec.empty() ? builtin_presentations(args.rings) : parse_spec(read_file(args.spec));
    corpus.registry = registry_of(presentations, limits);
    std::vector<std::string> names = args.rings;
    if (names.empty() && !args.spec.empty())
      for (const auto& p : presentations) names.push_back(p.name);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& n : names) {
      if (!corpus.registry->contains(n)) throw PresentationError("unknown ring '" + n + "'");
      corpus.entries.push_back({n, presentation_order(corpus.registry->presentation(n), *corpus.registry), {}});
    }
    source = {{"spec", format_spec(corpus.registry->presentations())}, {"rings", names}};
  }

  ScanOptions scan{args.common.analysis(), args.common.jobs};
  const auto analyses = analyze_corpus(corpus, scan);
  std::vector<Verdict> verdicts;
  for (const auto& a : analyses) {
    auto vs = run_ring_checks(a, ids);
    verdicts.insert(verdicts.end(), vs.begin(), vs.end());
  }
  auto globals = run_global_checks(ids);
  verdicts.insert(verdicts.end(), globals.begin(), globals.end());

  Json config = {{"command", "verify"}, {"limits", limits_json(limits, scan.analysis)}, {"theorems", ids}};
  config.update(source);
  const auto report = verdict_report(verdicts, config);
  if (!args.json.empty()) write_file(args.json, render_json(report));

  out << "checked " << ids.size() << " theorem(s) on " << analyses.size() << " ring(s)\n";
  print_verdict_summary(out, report);
  return has_fail(verdicts) ? kExitViolation : kExitOk;
}

// corpus -------------------------------------------------------------------

struct CorpusArgs {
  std::size_t max_order = 0;
  std::string families = "zn,product,algebra,examples";
  std::string scan;
  std::string out;
  CommonOptions common;
};

int cmd_corpus(const CorpusArgs& args, std::ostream& out) {
  const auto families = parse_families(args.families, ',');
  const auto limits = args.common.limits();
  const auto corpus = generate_corpus(args.max_order, families, limits);
  ScanOptions scan{args.common.analysis(), args.common.jobs};
  const auto analyses = analyze_corpus(corpus, scan);

  Json report = args.scan == "conjecture-0.1" ? scan_clique_chromatic(corpus, analyses)
                                              : scan_diameter_gap(corpus, analyses);
  report["version"] = std::string(kVersion);
  report["config"] = {{"command", "corpus"},
                      {"scan", args.scan},
                      {"max_order", args.max_order},
                      {"families", corpus_json(corpus)["families"]},
                      {"limits", limits_json(limits, scan.analysis)}};
  if (!args.out.empty()) write_file(args.out, render_json(report));

  out << "corpus: " << corpus.entries.size() << " rings analyzed (max order " << args.max_order << ")\n";
  if (args.scan == "conjecture-0.1") {
    const auto& s = report["summary"];
    out << "chi(AG) = cl(AG): " << s["consistent"] << " consistent, " << s["counterexamples"]
        << " counterexamples, " << s["inconclusive"] << " inconclusive, " << s["empty_graph"]
        << " with empty AG\n";
    for (const auto& r : report["inconclusive"]) out << "  INCONCLUSIVE " << r.get<std::string>() << "\n";
    for (const auto& c : report["counterexamples"])
      out << "  COUNTEREXAMPLE " << c["ring"].get<std::string>() << "\n";
    return report["counterexamples"].empty() ? kExitOk : kExitViolation;
  }
  out << "diam(Gamma) = 2, diam(AG) = 3: " << report["hits"].size() << " hit(s)\n";
  for (const auto& h : report["hits"]) out << "  " << h["ring"].get<std::string>() << "\n";
  return kExitOk;
}

}  // namespace

std::vector<RingPresentation> builtin_presentations(const std::vector<std::string>& names) {
  static const std::regex zn_re("Z([0-9]+)");
  static const std::regex product_re("Z[0-9]+(xZ[0-9]+)+");
  const auto algebras = algebra_family_with_helpers();
  std::vector<RingPresentation> out;
  auto have = [&](const std::string& n) {
    return std::any_of(out.begin(), out.end(), [&](const RingPresentation& p) { return p.name == n; });
  };
  auto add_zn = [&](const std::string& n) {
    if (!have(n)) out.push_back(RingPresentation::zn(n, static_cast<std::uint32_t>(std::stoul(n.substr(1)))));
  };
  for (const auto& name : names) {
    if (have(name)) continue;
    const auto alg = std::find_if(algebras.begin(), algebras.end(),
                                  [&](const RingPresentation& p) { return p.name == name; });
    if (alg != algebras.end()) {
      for (const auto& c : alg->components)
        for (const auto& h : algebras)
          if (h.name == c && !have(c)) out.push_back(h);
      out.push_back(*alg);
    } else if (std::regex_match(name, zn_re) && name.size() <= 10) {
      add_zn(name);
    } else if (std::regex_match(name, product_re)) {
      std::vector<std::string> comps;
      std::stringstream ss(name);
      std::string part;
      while (std::getline(ss, part, 'x')) {
        if (part.size() > 10) throw PresentationError("modulus too large in '" + name + "'");
        add_zn(part);
        comps.push_back(part);
      }
      out.push_back(RingPresentation::product(name, comps));
    } else {
      throw PresentationError("unknown ring '" + name + "' (define it in a file passed with --spec)");
    }
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Annihilating-ideal graphs of finite commutative rings", "anngraph"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one ring and report its graphs");
  analyze_cmd->add_option("ring", analyze_args.ring, "Ring name")->required();
  analyze_cmd->add_option("--spec", analyze_args.spec, "Ring spec file");
  analyze_cmd->add_option("--graph", analyze_args.graph, "Graphs to report")
      ->check(CLI::IsMember({"ag", "gamma", "both"}))
      ->capture_default_str();
  analyze_cmd->add_option("--dot", analyze_args.dot, "Write DOT for the selected graphs");
  analyze_cmd->add_option("--json", analyze_args.json, "Write the JSON report");
  analyze_cmd->add_option("--theorems", analyze_args.theorems, "Theorem ids to check, or all");
  add_common(analyze_cmd, analyze_args.common);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem checkers");
  verify_cmd->add_option("rings", verify_args.rings, "Ring names (default: every ring in --spec)");
  verify_cmd->add_option("--spec", verify_args.spec, "Ring spec file");
  verify_cmd->add_option("--corpus", verify_args.corpus, "Generated corpus: max-order=N[,families=a+b]");
  verify_cmd->add_option("--theorems", verify_args.theorems, "Theorem ids, or all")->capture_default_str();
  verify_cmd->add_option("--json", verify_args.json, "Write the verdict report");
  add_common(verify_cmd, verify_args.common);

  CorpusArgs corpus_args;
  auto* corpus_cmd = app.add_subcommand("corpus", "Generate a ring corpus and run a scan");
  corpus_cmd->add_option("--max-order", corpus_args.max_order, "Largest ring order")->required();
  corpus_cmd->add_option("--families", corpus_args.families, "Comma-separated families")->capture_default_str();
  corpus_cmd->add_option("--scan", corpus_args.scan, "Scan to run")
      ->check(CLI::IsMember({"conjecture-0.1", "diam-gap"}))
      ->required();
  corpus_cmd->add_option("--out", corpus_args.out, "Write the scan report");
  add_common(corpus_cmd, corpus_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    return cmd_corpus(corpus_args, out);
  } catch (const ParseError& e) {
    err << "error: parse failure at " << e.what() << "\n";
    return kExitInput;
  } catch (const PresentationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const AxiomViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace anngraph
