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

#include "anngraph/spec_format.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>

#include "anngraph/errors.hpp"

namespace anngraph {

namespace {

struct Statement {
  std::string text;
  std::vector<std::size_t> line_of;  // source line of each character
  std::size_t first_line = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool starts_statement(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && space(s[i])) ++i;
  return s.compare(i, 4, "ring") == 0 && (i + 4 == s.size() || !ident_char(s[i + 4]));
}

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = strip_comment(raw);
    if (body.find_first_not_of(" \t\r\f\v") == std::string::npos) continue;
    if (starts_statement(body)) {
      out.push_back({});
      out.back().first_line = line;
    } else if (out.empty()) {
      throw ParseError(line, "expected a statement starting with 'ring'");
    } else {
      out.back().text += ' ';
      out.back().line_of.push_back(line);
    }
    out.back().text += body;
    out.back().line_of.insert(out.back().line_of.end(), body.size(), line);
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Statement& s) : s_(s) {}

  std::size_t line() const {
    if (s_.line_of.empty()) return s_.first_line;
    return s_.line_of[std::min(pos_, s_.line_of.size() - 1)];
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line(), what); }

  void skip_ws() {
    while (pos_ < s_.text.size() && space(s_.text[pos_])) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.text.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.text.size() ? s_.text[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_word(std::string_view w) {
    skip_ws();
    const auto end = pos_ + w.size();
    return s_.text.compare(pos_, w.size(), w) == 0 && (end == s_.text.size() || !ident_char(s_.text[end]));
  }
  void expect_word(std::string_view w) {
    if (!peek_word(w)) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  std::string identifier() {
    skip_ws();
    if (pos_ >= s_.text.size() || !ident_start(s_.text[pos_])) fail("expected a symbol");
    const auto start = pos_;
    while (pos_ < s_.text.size() && ident_char(s_.text[pos_])) ++pos_;
    return s_.text.substr(start, pos_ - start);
  }
  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.text.size() || !std::isdigit(static_cast<unsigned char>(s_.text[pos_])))
      fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < s_.text.size() && std::isdigit(static_cast<unsigned char>(s_.text[pos_]))) {
      const auto d = static_cast<std::uint64_t>(s_.text[pos_++] - '0');
      if (v > (static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - d) / 10)
        fail("integer out of range");
      v = v * 10 + d;
    }
    return v;
  }
  std::uint32_t positive_u32(const char* what) {
    const auto v = integer();
    if (v == 0 || v > std::numeric_limits<std::uint32_t>::max()) fail(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(v);
  }
  std::string quoted() {
    if (!accept('"')) fail("expected a quoted name");
    const auto end = s_.text.find('"', pos_);
    if (end == std::string::npos) fail("unterminated quoted name");
    std::string name = s_.text.substr(pos_, end - pos_);
    pos_ = end + 1;
    if (name.empty()) fail("empty ring name");
    return name;
  }
  /// Quoted, or a bare run of non-space characters.
  std::string name() {
    if (peek() == '"') return quoted();
    const auto start = pos_;
    while (pos_ < s_.text.size() && !space(s_.text[pos_]) && s_.text[pos_] != '"') ++pos_;
    if (start == pos_) fail("expected a ring name");
    return s_.text.substr(start, pos_ - start);
  }

 private:
  const Statement& s_;
  std::size_t pos_ = 0;
};

LinearExpr parse_expr(Cursor& c) {
  LinearExpr e;
  bool first = true;
  while (true) {
    std::int64_t sign = 1;
    if (first) {
      if (c.accept('-')) sign = -1;
    } else if (c.accept('-')) {
      sign = -1;
    } else if (!c.accept('+')) {
      break;
    }
    const char next = c.peek();
    if (std::isdigit(static_cast<unsigned char>(next))) {
      const auto n = sign * static_cast<std::int64_t>(c.integer());
      if (c.accept('*')) {
        e.terms.push_back({n, c.identifier()});
      } else {
        e.constant += n;
      }
    } else if (ident_start(next) && !c.peek_word("rel")) {
      e.terms.push_back({sign, c.identifier()});
    } else {
      c.fail("malformed relation expression");
    }
    first = false;
  }
  if (first) c.fail("malformed relation expression: empty right-hand side");
  return e;
}

RingPresentation parse_statement(const Statement& st) {
  Cursor c(st);
  c.expect_word("ring");
  const std::string name = c.quoted();
  const std::string kind = c.identifier();
  RingPresentation p;
  if (kind == "zn") {
    p = RingPresentation::zn(name, c.positive_u32("modulus"));
  } else if (kind == "product") {
    std::vector<std::string> comps;
    while (!c.at_end()) comps.push_back(c.name());
    if (comps.size() < 2) c.fail("a product needs at least two components");
    p = RingPresentation::product(name, std::move(comps));
  } else if (kind == "algebra") {
    c.expect_word("base");
    c.expect('=');
    const auto base = c.positive_u32("base modulus");
    c.expect_word("gens");
    c.expect('=');
    std::vector<Generator> gens;
    std::set<std::string> declared;
    do {
      auto sym = c.identifier();
      if (sym == "rel") c.fail("'rel' cannot be a generator symbol");
      c.expect(':');
      const auto ord = c.positive_u32("generator order");
      if (!declared.insert(sym).second) c.fail("duplicate generator '" + sym + "'");
      gens.push_back({std::move(sym), ord});
    } while (c.accept(','));
    std::vector<Relation> rels;
    while (true) {
      while (c.accept(';')) {
      }
      if (c.at_end()) break;
      c.expect_word("rel");
      Relation r;
      r.left = c.identifier();
      c.expect('*');
      r.right = c.identifier();
      c.expect('=');
      r.value = parse_expr(c);
      for (const auto* s : {&r.left, &r.right})
        if (!declared.count(*s)) c.fail("malformed relation: unknown generator '" + *s + "'");
      for (const auto& t : r.value.terms)
        if (!declared.count(t.symbol)) c.fail("malformed relation: unknown generator '" + t.symbol + "'");
      rels.push_back(std::move(r));
      if (!c.at_end() && c.peek() != ';' && !c.peek_word("rel")) c.fail("expected ';' between relations");
    }
    p = RingPresentation::algebra(name, base, std::move(gens), std::move(rels));
  } else {
    c.fail("unknown ring kind '" + kind + "'");
  }
  if (!c.at_end()) c.fail("unexpected trailing text");
  return p;
}

}  // namespace

std::vector<RingPresentation> parse_spec(std::string_view text) {
  std::vector<RingPresentation> out;
  std::set<std::string> names;
  for (const auto& st : split_statements(text)) {
    auto p = parse_statement(st);
    if (names.count(p.name)) throw ParseError(st.first_line, "duplicate ring name '" + p.name + "'");
    for (const auto& comp : p.components)
      if (!names.count(comp))
        throw ParseError(st.first_line, "unknown component '" + comp + "' (components must be defined earlier)");
    names.insert(p.name);
    out.push_back(std::move(p));
  }
  return out;
}

std::string format_expr(const LinearExpr& e) {
  std::string s;
  bool any = false;
  if (e.constant != 0 || e.terms.empty()) {
    s = std::to_string(e.constant);
    any = true;
  }
  for (const auto& t : e.terms) {
    const bool neg = t.coefficient < 0;
    const auto mag = neg ? std::uint64_t{0} - static_cast<std::uint64_t>(t.coefficient)
                         : static_cast<std::uint64_t>(t.coefficient);
    if (any) {
      s += neg ? " - " : " + ";
    } else if (neg) {
      s += "-";
    }
    s += std::to_string(mag) + "*" + t.symbol;
    any = true;
  }
  return s;
}

std::string format_presentation(const RingPresentation& p) {
  std::string s = "ring \"" + p.name + "\" " + std::string(to_string(p.kind));
  switch (p.kind) {
    case PresentationKind::zn:
      s += " " + std::to_string(p.modulus);
      break;
    case PresentationKind::product:
      for (const auto& c : p.components) s += " \"" + c + "\"";
      break;
    case PresentationKind::algebra: {
      s += " base=" + std::to_string(p.modulus) + " gens=";
      for (std::size_t i = 0; i < p.generators.size(); ++i)
        s += (i ? "," : "") + p.generators[i].symbol + ":" + std::to_string(p.generators[i].additive_order);
      for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        s += (i ? "; rel " : " rel ") + r.left + "*" + r.right + " = " + format_expr(r.value);
      }
      break;
    }
  }
  return s;
}

std::string format_spec(const std::vector<RingPresentation>& presentations) {
  std::string s;
  for (const auto& p : presentations) s += format_presentation(p) + "\n";
  return s;
}

}  // namespace anngraph
