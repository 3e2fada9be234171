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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "anngraph/cli.hpp"
#include "anngraph/corpus.hpp"
#include "anngraph/errors.hpp"
#include "anngraph/report.hpp"
#include "anngraph/spec_format.hpp"
#include "fixtures.hpp"

using namespace anngraph;
namespace fs = std::filesystem;

namespace {

const char* kAlgebraSpec = R"(# the order-32 local algebra
ring "Z4" zn 4
ring "AN" algebra base=4 gens=x:2,y:2,z:2
  rel x*x = 2; rel y*y = 2; rel z*z = 0
  rel x*y = 0 ; rel x*z = 0; rel y*z = 2
ring "P" product Z4 "AN"   # trailing comment
)";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "anngraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("anngraph-test-" + std::to_string(::getpid()) + "-" +
                                         std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }
  std::size_t entries() const {
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(path_), fs::directory_iterator()));
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("spec parsing") {
  const auto ps = parse_spec(kAlgebraSpec);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] == RingPresentation::zn("Z4", 4));
  CHECK(ps[1].kind == PresentationKind::algebra);
  CHECK(ps[1].relations.size() == 6);
  CHECK(ps[1].relations == chromatic_gap_algebra().relations);
  CHECK(ps[1].generators == chromatic_gap_algebra().generators);
  CHECK(ps[2].components == std::vector<std::string>{"Z4", "AN"});

  RingRegistry reg;
  for (const auto& p : ps) reg.add(p);
  CHECK(reg.build("AN")->order() == 32);

  const auto f4 = parse_spec("ring \"F4\" algebra base=2 gens=a:2 rel a*a = 1 + 1*a");
  CHECK(f4[0].relations[0].value == fixtures::expr(1, {{1, "a"}}));
  const auto neg = parse_spec("ring \"N\" algebra base = 5 gens = a : 5 rel a * a = -2 - 3*a + a");
  CHECK(neg[0].relations[0].value == fixtures::expr(-2, {{-3, "a"}, {1, "a"}}));
}

TEST_CASE("spec errors carry line numbers") {
  CHECK(parse_error_line("ring \"P\" product Z4 Z4\nring \"Z4\" zn 4\n") == 1);
  CHECK(parse_error_line("ring \"A\" zn 4\n\n# c\nring \"A\" zn 6\n") == 4);
  CHECK(parse_error_line("ring \"A\" zn 4\nring \"B\" algebra base=2 gens=a:2\n rel a*a = 1 +\n") == 3);
  CHECK(parse_error_line("ring \"B\" algebra base=2 gens=a:2 rel a*b = 1\n") == 1);
  CHECK(parse_error_line("ring \"B\" algebra base=2 gens=a:2 rel a*a = 1 2\n") == 1);
  CHECK(parse_error_line("ring \"B\" zn 0\n") == 1);
  CHECK(parse_error_line("ring \"B\" zn 4 5\n") == 1);
  CHECK(parse_error_line("ring \"B\" matrix 4\n") == 1);
  CHECK(parse_error_line("zn 4\n") == 1);
  CHECK(parse_error_line("ring B zn 4\n") == 1);
  CHECK(parse_error_line("ring \"B\" product Z4\n") == 1);
  CHECK(parse_error_line("ring \"B\" algebra base=2 gens=a:2,a:2 rel a*a = 0\n") == 1);
  CHECK(parse_error_line("ring \"Z\" zn 99999999999999999999\n") == 1);
  CHECK(parse_spec("# only comments\n\n").empty());
}

TEST_CASE("format then parse is the identity on random presentations") {
  std::mt19937 rng(20261017);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<std::string> syms{"a", "b", "x_1", "Y", "t9"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<RingPresentation> ps;
    const int count = pick(1, 5);
    for (int i = 0; i < count; ++i) {
      const std::string name = "R" + std::to_string(i) + (pick(0, 1) ? "[y]/(y^2)" : "");
      const int kind = i < 2 ? pick(0, 1) * 2 : pick(0, 2);
      if (kind == 0) {
        ps.push_back(RingPresentation::zn(name, static_cast<std::uint32_t>(pick(1, 100000))));
      } else if (kind == 1) {
        std::vector<std::string> comps;
        for (int k = pick(2, 4); k > 0; --k) comps.push_back(ps[static_cast<std::size_t>(pick(0, i - 1))].name);
        ps.push_back(RingPresentation::product(name, comps));
      } else {
        std::vector<Generator> gens;
        const int ng = pick(1, 3);
        for (int g = 0; g < ng; ++g) gens.push_back({syms[static_cast<std::size_t>(g)], 2});
        std::vector<Relation> rels;
        for (int r = pick(0, 4); r > 0; --r) {
          LinearExpr e;
          e.constant = pick(-1000, 1000) * (pick(0, 2) == 0 ? 0 : 1);
          for (int t = pick(0, 3); t > 0; --t)
            e.terms.push_back({pick(-50, 50), syms[static_cast<std::size_t>(pick(0, ng - 1))]});
          rels.push_back({syms[static_cast<std::size_t>(pick(0, ng - 1))],
                          syms[static_cast<std::size_t>(pick(0, ng - 1))], e});
        }
        ps.push_back(RingPresentation::algebra(name, static_cast<std::uint32_t>(pick(1, 64)), gens, rels));
      }
    }
    const auto text = format_spec(ps);
    INFO(text);
    CHECK(parse_spec(text) == ps);
  }
}

TEST_CASE("built-in ring names") {
  const auto ps = builtin_presentations({"Z2xZ4", "AN", "F4xZ4", "Z12"});
  std::vector<std::string> names;
  for (const auto& p : ps) names.push_back(p.name);
  CHECK(names == std::vector<std::string>{"Z2", "Z4", "Z2xZ4", "AN", "F4", "F4xZ4", "Z12"});
  CHECK_THROWS_AS(builtin_presentations({"Q8"}), PresentationError);
}

TEST_CASE("analyze reports and exit codes") {
  TempDir dir;
  const auto spec = dir.write("rings.txt", kAlgebraSpec);
  const auto json = dir.file("an.json"), dot = dir.file("an.dot");
  const auto r = cli({"analyze", "AN", "--spec", spec, "--json", json, "--dot", dot});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("AG(AN): 16 vertices") != std::string::npos);
  const auto report = Json::parse(slurp(json));
  for (const char* key : {"ring", "order", "flags", "lattice", "ag", "gamma", "verdicts", "version", "config"})
    CHECK_MESSAGE(report.contains(key), key);
  CHECK(report["order"] == 32);
  CHECK(report["lattice"]["n_ideals"] == 16);
  CHECK(report["ag"]["chi"] == 4);
  CHECK(report["ag"]["clique"] == 4);
  CHECK(report["gamma"]["chi"] == 5);
  CHECK(report["flags"]["zr_is_ideal"] == true);

  // The config echo re-parses to the presentations that built the ring.
  RingRegistry reg;
  for (const auto& p : parse_spec(kAlgebraSpec)) reg.add(p);
  CHECK(parse_spec(report["config"]["spec"].get<std::string>()) == reg.closure("AN"));

  const auto dot_text = slurp(dot);
  CHECK(dot_text.rfind("graph \"AG(AN)\" {", 0) == 0);
  CHECK(dot_text.find("graph \"Gamma(AN)\" {") != std::string::npos);

  // Same input, same bytes.
  const auto json2 = dir.file("an2.json"), dot2 = dir.file("an2.dot");
  CHECK(cli({"analyze", "AN", "--spec", spec, "--json", json2, "--dot", dot2}).code == kExitOk);
  CHECK(slurp(json) == slurp(json2));
  CHECK(slurp(dot) == slurp(dot2));
}

TEST_CASE("analyze edge cases") {
  TempDir dir;
  const auto json = dir.file("z4.json");
  CHECK(cli({"analyze", "Z4", "--json", json}).code == kExitOk);
  const auto z4 = Json::parse(slurp(json));
  CHECK(z4["ag"]["vertices"] == 1);
  CHECK(z4["ag"]["diameter"] == 0);

  const auto f4 = cli({"analyze", "F4", "--graph", "ag", "--json", json});
  CHECK(f4.code == kExitOk);
  const auto field = Json::parse(slurp(json));
  CHECK(field["ag"]["applicable"] == false);
  CHECK(field["gamma"].is_null());

  const auto checked = cli({"analyze", "Z12", "--theorems", "thm-1.4", "--json", json});
  CHECK(checked.code == kExitOk);
  CHECK(Json::parse(slurp(json))["verdicts"][0]["status"] == "pass");
}

TEST_CASE("input errors exit 1 and leave no files") {
  TempDir dir;
  const auto bad = dir.write("bad.txt", "ring \"A\" zn 4\nring \"P\" product A B\n");
  const auto out = dir.file("out.json");
  const auto r = cli({"analyze", "A", "--spec", bad, "--json", out});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK_FALSE(fs::exists(out));

  CHECK(cli({"analyze", "Nope", "--json", out}).code == kExitInput);
  CHECK(cli({"analyze", "A", "--spec", dir.file("missing.txt")}).code == kExitInput);
  CHECK(cli({"verify", "Z12", "--theorems", "thm-9.9", "--json", out}).code == kExitInput);
  CHECK(cli({"corpus", "--max-order", "16", "--families", "zn,matrix", "--scan", "diam-gap"}).code == kExitInput);
  CHECK(cli({"corpus", "--max-order", "16", "--scan", "other"}).code == kExitInput);
  CHECK(cli({"verify", "--corpus", "max-order=abc"}).code == kExitInput);
  CHECK(cli({}).code == kExitInput);
  CHECK_FALSE(fs::exists(out));

  // Unwritable destination: the error is reported and nothing is left behind.
  const auto nowhere = dir.file("no/such/dir/out.json");
  CHECK(cli({"analyze", "Z4", "--json", nowhere}).code == kExitInput);
  CHECK(dir.entries() == 1);

  // A malformed algebra is an input error too.
  const auto assoc = dir.write("assoc.txt", "ring \"B\" algebra base=2 gens=a:2,b:2 rel a*a = 1*b; rel a*b = 0; rel b*b = 1\n");
  CHECK(cli({"analyze", "B", "--spec", assoc}).code == kExitInput);
}

TEST_CASE("limits exit 2") {
  TempDir dir;
  const auto out = dir.file("scan.json");
  CHECK(cli({"corpus", "--max-order", "5000", "--scan", "diam-gap", "--out", out}).code == kExitLimit);
  CHECK(cli({"analyze", "Z64", "--ideal-budget", "3", "--json", out}).code == kExitLimit);
  CHECK(cli({"analyze", "Z64", "--size-cap", "32", "--json", out}).code == kExitLimit);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("verify") {
  TempDir dir;
  const auto out = dir.file("v.json");
  const auto an = cli({"verify", "AN", "--theorems", "prop-2.1", "--json", out});
  CHECK(an.code == kExitOk);
  const auto report = Json::parse(slurp(out));
  REQUIRE(report["verdicts"].size() == 1);
  CHECK(report["verdicts"][0]["status"] == "pass");

  const auto z12 = cli({"verify", "Z12", "--theorems", "thm-1.4"});
  CHECK(z12.code == kExitOk);
  CHECK(z12.out.find("1 pass") != std::string::npos);

  // A known failing statement makes the run exit 3 with the failure listed.
  const auto bip = cli({"verify", "Z2xZ4", "--theorems", "thm-2.3", "--json", out});
  CHECK(bip.code == kExitViolation);
  CHECK(Json::parse(slurp(out))["failures"][0]["ring"] == "Z2xZ4");

  const auto spec = dir.write("rings.txt", kAlgebraSpec);
  const auto all = cli({"verify", "--spec", spec, "--theorems", "prop-1.1", "thm-1.9", "--json", out});
  CHECK(all.code == kExitOk);
  const auto multi = Json::parse(slurp(out));
  CHECK(multi["verdicts"].size() == 6);
  CHECK(multi["verdicts"][0]["ring"] == "AN");
  CHECK(multi["verdicts"][0]["theorem"] == "prop-1.1");
  CHECK(multi["verdicts"][1]["theorem"] == "thm-1.9");

  const auto corpus = cli({"verify", "--corpus", "max-order=16,families=zn+examples", "--theorems", "thm-1.4",
                           "--jobs", "2", "--json", out});
  CHECK(corpus.code == kExitOk);
  CHECK(Json::parse(slurp(out))["summary"]["fail"] == 0);
}

TEST_CASE("corpus scans") {
  TempDir dir;
  const auto a = dir.file("a.json"), b = dir.file("b.json");
  const auto r = cli({"corpus", "--max-order", "16", "--families", "zn", "--scan", "conjecture-0.1", "--out", a});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("9 rings analyzed") != std::string::npos);
  const auto scan = Json::parse(slurp(a));
  CHECK(scan["rings"].size() == 9);
  CHECK(scan["counterexamples"].empty());
  CHECK(scan["version"] == std::string(kVersion));

  CHECK(cli({"corpus", "--max-order", "24", "--scan", "conjecture-0.1", "--out", a}).code == kExitOk);
  CHECK(cli({"corpus", "--max-order", "24", "--scan", "conjecture-0.1", "--jobs", "3", "--out", b}).code ==
        kExitOk);
  CHECK(slurp(a) == slurp(b));

  const auto gap = cli({"corpus", "--max-order", "32", "--scan", "diam-gap", "--out", a});
  CHECK(gap.code == kExitOk);
  const auto hits = Json::parse(slurp(a));
  CHECK(hits.contains("hits"));
  CHECK(hits["diameter_pairs"].contains("(3,3)"));
}
