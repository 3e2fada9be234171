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

#include "anngraph/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "anngraph/errors.hpp"

namespace anngraph {

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

std::size_t checked_order(std::span<const std::uint32_t> radices, const RingLimits& limits,
                          const std::string& name) {
  std::uint64_t n = 1;
  for (auto r : radices) {
    n *= r;
    if (n > limits.size_cap)
      throw CapExceeded("ring '" + name + "' exceeds the size cap of " +
                        std::to_string(limits.size_cap) + " elements");
  }
  return static_cast<std::size_t>(n);
}

std::vector<std::uint32_t> mixed_decode(std::span<const std::uint32_t> radices, Index a) {
  std::vector<std::uint32_t> out(radices.size());
  std::uint64_t v = a;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    out[k] = static_cast<std::uint32_t>(v % radices[k]);
    v /= radices[k];
  }
  return out;
}

Index mixed_encode(std::span<const std::uint32_t> radices, std::span<const std::uint32_t> c) {
  std::uint64_t v = 0;
  for (std::size_t k = radices.size(); k-- > 0;) v = v * radices[k] + c[k];
  return static_cast<Index>(v);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t m) {
  const std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

/// Assembles a FiniteRing from evaluators, materializing tables when small.
class RingBuilder {
 public:
  using UnaryOp = std::function<Index(Index)>;
  using LabelFn = std::function<std::string(Index)>;

  static std::shared_ptr<FiniteRing> start(std::string name, std::vector<std::uint32_t> radices,
                                           const RingLimits& limits) {
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->order_ = checked_order(radices, limits, name);
    r->name_ = std::move(name);
    r->radices_ = std::move(radices);
    r->id_ = next_ring_id.fetch_add(1);
    return r;
  }

  static void finish(FiniteRing& r, FiniteRing::BinaryOp add, FiniteRing::BinaryOp mul,
                     const UnaryOp& neg, Index one, const LabelFn& label,
                     const RingLimits& limits) {
    const std::size_t n = r.order_;
    r.one_ = one;
    r.neg_.resize(n);
    r.labels_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      r.neg_[a] = neg(static_cast<Index>(a));
      r.labels_[a] = label(static_cast<Index>(a));
    }
    if (n <= limits.table_limit && n <= 65536) {
      r.add_table_.resize(n * n);
      r.mul_table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          r.add_table_[a * n + b] = static_cast<std::uint16_t>(add(static_cast<Index>(a), static_cast<Index>(b)));
          r.mul_table_[a * n + b] = static_cast<std::uint16_t>(mul(static_cast<Index>(a), static_cast<Index>(b)));
        }
    } else {
      r.add_fn_ = std::move(add);
      r.mul_fn_ = std::move(mul);
    }
  }

  static void set_presentation(FiniteRing& r, RingPresentation p) { r.presentation_ = std::move(p); }
  static void set_generators(FiniteRing& r, std::vector<Generator> g) { r.generators_ = std::move(g); }
  static void set_components(FiniteRing& r, std::vector<RingPtr> c) { r.components_ = std::move(c); }
  static void set_parent(FiniteRing& r, RingPtr p) { r.parent_ = std::move(p); }
};

Index FiniteRing::power(Index a, std::uint64_t e) const {
  Index result = one_;
  Index base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::string FiniteRing::label(Index a) const { return labels_.at(a); }

std::vector<std::uint32_t> FiniteRing::decode(Index a) const {
  if (a >= order_) throw std::out_of_range("element index out of range");
  return mixed_decode(radices_, a);
}

Index FiniteRing::encode(std::span<const std::uint32_t> coords) const {
  if (coords.size() != radices_.size()) throw std::invalid_argument("coordinate count mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] >= radices_[k]) throw std::out_of_range("coordinate out of range");
  return mixed_encode(radices_, coords);
}

Index FiniteRing::element(const LinearExpr& expr) const {
  if (!presentation_ || presentation_->kind == PresentationKind::product)
    throw PresentationError("ring '" + name_ + "' has no coefficient presentation");
  std::vector<std::uint32_t> c(radices_.size(), 0);
  c[0] = reduce(expr.constant, radices_[0]);
  for (const auto& t : expr.terms) {
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [&](const Generator& g) { return g.symbol == t.symbol; });
    if (it == generators_.end())
      throw PresentationError("unknown generator '" + t.symbol + "' in ring '" + name_ + "'");
    const std::size_t k = 1 + static_cast<std::size_t>(it - generators_.begin());
    c[k] = reduce(static_cast<std::int64_t>(c[k]) + t.coefficient, radices_[k]);
  }
  return mixed_encode(radices_, c);
}

std::optional<Index> FiniteRing::find_label(const std::string& label) const {
  for (std::size_t a = 0; a < labels_.size(); ++a)
    if (labels_[a] == label) return static_cast<Index>(a);
  return std::nullopt;
}

RingPtr make_zn(const RingPresentation& p, const RingLimits& limits) {
  if (p.kind != PresentationKind::zn) throw PresentationError("'" + p.name + "' is not a zn presentation");
  const std::uint32_t m = p.modulus;
  if (m < 2) throw PresentationError("Z_m needs m >= 2 (ring '" + p.name + "')");
  auto r = RingBuilder::start(p.name, {m}, limits);
  RingBuilder::finish(
      *r, [m](Index a, Index b) { return static_cast<Index>((std::uint64_t{a} + b) % m); },
      [m](Index a, Index b) { return static_cast<Index>((std::uint64_t{a} * b) % m); },
      [m](Index a) { return static_cast<Index>((m - a) % m); }, 1, [](Index a) { return std::to_string(a); },
      limits);
  RingBuilder::set_presentation(*r, p);
  validate_ring_axioms(*r, limits);
  return r;
}

RingPtr make_zn(std::uint32_t m, const RingLimits& limits) {
  return make_zn(RingPresentation::zn("Z" + std::to_string(m), m), limits);
}

RingPtr make_product(std::span<const RingPtr> components, const RingLimits& limits, std::string name) {
  if (components.size() < 2) throw PresentationError("a product needs at least two components");
  std::vector<std::uint32_t> radices;
  std::vector<std::string> names;
  for (const auto& c : components) {
    radices.push_back(static_cast<std::uint32_t>(c->order()));
    names.push_back(c->name());
  }
  if (name.empty()) {
    for (std::size_t k = 0; k < names.size(); ++k) name += (k ? "x" : "") + names[k];
  }
  auto r = RingBuilder::start(name, radices, limits);
  std::vector<RingPtr> comps(components.begin(), components.end());
  const auto rad = radices;

  auto componentwise = [comps, rad](auto op) {
    return [comps, rad, op](Index a, Index b) {
      auto ca = mixed_decode(rad, a);
      auto cb = mixed_decode(rad, b);
      for (std::size_t k = 0; k < comps.size(); ++k) ca[k] = op(*comps[k], ca[k], cb[k]);
      return mixed_encode(rad, ca);
    };
  };
  std::vector<std::uint32_t> ones;
  for (const auto& c : comps) ones.push_back(c->one());
  RingBuilder::finish(
      *r, componentwise([](const FiniteRing& f, Index x, Index y) { return f.add(x, y); }),
      componentwise([](const FiniteRing& f, Index x, Index y) { return f.mul(x, y); }),
      [&](Index a) {
        auto ca = mixed_decode(rad, a);
        for (std::size_t k = 0; k < comps.size(); ++k) ca[k] = comps[k]->neg(ca[k]);
        return mixed_encode(rad, ca);
      },
      mixed_encode(rad, ones),
      [&](Index a) {
        auto ca = mixed_decode(rad, a);
        std::string s = "(";
        for (std::size_t k = 0; k < comps.size(); ++k) s += (k ? "," : "") + comps[k]->label(ca[k]);
        return s + ")";
      },
      limits);
  RingBuilder::set_presentation(*r, RingPresentation::product(name, names));
  RingBuilder::set_components(*r, comps);
  validate_ring_axioms(*r, limits);
  return r;
}

RingPtr make_algebra(const RingPresentation& p, const RingLimits& limits) {
  if (p.kind != PresentationKind::algebra)
    throw PresentationError("'" + p.name + "' is not an algebra presentation");
  const std::uint32_t m = p.modulus;
  if (m < 2) throw PresentationError("algebra base modulus must be >= 2 (ring '" + p.name + "')");

  const std::size_t k = p.generators.size();
  std::vector<std::uint32_t> radices{m};
  std::map<std::string, std::size_t> slot;  // symbol -> coordinate (1-based)
  for (const auto& g : p.generators) {
    if (!is_identifier(g.symbol))
      throw PresentationError("invalid generator symbol '" + g.symbol + "'");
    if (!slot.emplace(g.symbol, radices.size()).second)
      throw PresentationError("duplicate generator '" + g.symbol + "'");
    if (g.additive_order < 2)
      throw PresentationError("generator '" + g.symbol + "' needs additive order >= 2");
    // m * 1 = 0 forces m * g = 0.
    if (m % g.additive_order != 0)
      throw PresentationError("order-compatibility violation: ord(" + g.symbol + ")=" +
                              std::to_string(g.additive_order) + " does not divide base " +
                              std::to_string(m));
    radices.push_back(g.additive_order);
  }
  const std::size_t dims = k + 1;
  checked_order(radices, limits, p.name);

  // Structure constants: table[i][j] = e_i * e_j, with e_0 = 1.
  std::vector<std::vector<std::vector<std::uint32_t>>> table(
      dims, std::vector<std::vector<std::uint32_t>>(dims));
  for (std::size_t j = 0; j < dims; ++j) {
    std::vector<std::uint32_t> e(dims, 0);
    e[j] = 1;
    table[0][j] = e;
    table[j][0] = e;
  }
  for (const auto& rel : p.relations) {
    auto li = slot.find(rel.left);
    auto ri = slot.find(rel.right);
    if (li == slot.end() || ri == slot.end())
      throw PresentationError("relation " + rel.left + "*" + rel.right + " names an unknown generator");
    if (!table[li->second][ri->second].empty())
      throw PresentationError("duplicate relation for " + rel.left + "*" + rel.right);
    std::vector<std::uint32_t> v(dims, 0);
    v[0] = reduce(rel.value.constant, m);
    for (const auto& t : rel.value.terms) {
      auto s = slot.find(t.symbol);
      if (s == slot.end())
        throw PresentationError("relation " + rel.left + "*" + rel.right + " uses unknown symbol '" +
                                t.symbol + "'");
      v[s->second] = reduce(static_cast<std::int64_t>(v[s->second]) + t.coefficient, radices[s->second]);
    }
    table[li->second][ri->second] = v;
    table[ri->second][li->second] = v;
  }
  for (std::size_t i = 1; i < dims; ++i)
    for (std::size_t j = i; j < dims; ++j) {
      if (table[i][j].empty())
        throw PresentationError("missing relation for " + p.generators[i - 1].symbol + "*" +
                                p.generators[j - 1].symbol);
      // ord(g_i) * (g_i g_j) must vanish, or bilinear extension is ill-defined.
      for (std::size_t side : {i, j})
        for (std::size_t t = 0; t < dims; ++t)
          if ((std::uint64_t{radices[side]} * table[i][j][t]) % radices[t] != 0)
            throw PresentationError("order-compatibility violation: ord(" +
                                    p.generators[side - 1].symbol + ") * (" +
                                    p.generators[i - 1].symbol + "*" + p.generators[j - 1].symbol +
                                    ") != 0");
    }

  auto r = RingBuilder::start(p.name, radices, limits);
  const auto rad = radices;
  auto add = [rad](Index a, Index b) {
    auto ca = mixed_decode(rad, a);
    auto cb = mixed_decode(rad, b);
    for (std::size_t t = 0; t < rad.size(); ++t) ca[t] = (ca[t] + cb[t]) % rad[t];
    return mixed_encode(rad, ca);
  };
  auto mul = [rad, table](Index a, Index b) {
    const auto ca = mixed_decode(rad, a);
    const auto cb = mixed_decode(rad, b);
    std::vector<std::uint64_t> acc(rad.size(), 0);
    for (std::size_t i = 0; i < rad.size(); ++i) {
      if (!ca[i]) continue;
      for (std::size_t j = 0; j < rad.size(); ++j) {
        if (!cb[j]) continue;
        const std::uint64_t s = std::uint64_t{ca[i]} * cb[j];
        const auto& e = table[i][j];
        for (std::size_t t = 0; t < rad.size(); ++t)
          if (e[t]) acc[t] = (acc[t] + (s % rad[t]) * e[t]) % rad[t];
      }
    }
    std::vector<std::uint32_t> out(rad.size());
    for (std::size_t t = 0; t < rad.size(); ++t) out[t] = static_cast<std::uint32_t>(acc[t]);
    return mixed_encode(rad, out);
  };
  auto neg = [rad](Index a) {
    auto ca = mixed_decode(rad, a);
    for (std::size_t t = 0; t < rad.size(); ++t) ca[t] = (rad[t] - ca[t]) % rad[t];
    return mixed_encode(rad, ca);
  };
  auto gens = p.generators;
  auto label = [rad, gens](Index a) {
    const auto c = mixed_decode(rad, a);
    std::string s;
    for (std::size_t t = 1; t < rad.size(); ++t) {
      if (!c[t]) continue;
      if (!s.empty()) s += "+";
      if (c[t] != 1) s += std::to_string(c[t]) + "*";
      s += gens[t - 1].symbol;
    }
    if (c[0] || s.empty()) {
      if (!s.empty()) s += "+";
      s += std::to_string(c[0]);
    }
    return s;
  };
  RingBuilder::finish(*r, add, mul, neg, 1, label, limits);
  RingBuilder::set_presentation(*r, p);
  RingBuilder::set_generators(*r, p.generators);

  std::vector<Index> basis;
  for (std::size_t j = 0; j < dims; ++j) basis.push_back(mixed_encode(radices, table[0][j]));
  validate_ring_axioms(*r, limits, basis);
  return r;
}

RingPtr quotient(const RingPtr& ring, const Bitset& ideal, const RingLimits& limits) {
  const std::size_t n = ring->order();
  if (ideal.size() != n) throw RingMismatch("ideal does not belong to ring '" + ring->name() + "'");
  if (!ideal.test(0)) throw PresentationError("quotient by a set without zero");
  if (ideal.test(ring->one()))
    throw PresentationError("quotient of '" + ring->name() + "' by the whole ring is the zero ring");
  const auto members = ideal.to_vector();
  for (auto a : members) {
    for (auto b : members)
      if (!ideal.test(ring->add(static_cast<Index>(a), static_cast<Index>(b))))
        throw PresentationError("quotient by a set that is not an ideal");
    for (std::size_t x = 0; x < n; ++x)
      if (!ideal.test(ring->mul(static_cast<Index>(x), static_cast<Index>(a))))
        throw PresentationError("quotient by a set that is not an ideal");
  }

  std::vector<Index> coset_of(n, static_cast<Index>(-1));
  std::vector<Index> rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != static_cast<Index>(-1)) continue;
    const auto c = static_cast<Index>(rep.size());
    rep.push_back(static_cast<Index>(x));
    for (auto a : members) coset_of[ring->add(static_cast<Index>(x), static_cast<Index>(a))] = c;
  }
  const std::string name = ring->name() + "/I";
  auto r = RingBuilder::start(name, {static_cast<std::uint32_t>(rep.size())}, limits);
  auto parent = ring;
  RingBuilder::finish(
      *r, [parent, coset_of, rep](Index a, Index b) { return coset_of[parent->add(rep[a], rep[b])]; },
      [parent, coset_of, rep](Index a, Index b) { return coset_of[parent->mul(rep[a], rep[b])]; },
      [&](Index a) { return coset_of[parent->neg(rep[a])]; }, coset_of[parent->one()],
      [&](Index a) { return "[" + parent->label(rep[a]) + "]"; }, limits);
  RingBuilder::set_parent(*r, ring);
  return r;
}

void validate_ring_axioms(const FiniteRing& r, const RingLimits& limits, std::span<const Index> basis) {
  const std::size_t n = r.order();
  auto lbl = [&](Index a) { return r.label(a); };
  auto fail = [&](const std::string& law, std::initializer_list<Index> xs) {
    std::string s = law + " fails in ring '" + r.name() + "' at (";
    bool first = true;
    for (auto x : xs) {
      s += (first ? "" : ", ") + lbl(x);
      first = false;
    }
    throw AxiomViolation(s + ")");
  };
  auto check_triple = [&](Index a, Index b, Index c) {
    if (r.mul(a, r.mul(b, c)) != r.mul(r.mul(a, b), c)) fail("associativity", {a, b, c});
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("distributivity", {a, b, c});
    if (r.add(a, r.add(b, c)) != r.add(r.add(a, b), c)) fail("additive associativity", {a, b, c});
  };
  auto check_pair = [&](Index a, Index b) {
    if (r.mul(a, b) != r.mul(b, a)) fail("commutativity", {a, b});
    if (r.add(a, b) != r.add(b, a)) fail("additive commutativity", {a, b});
  };

  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Index>(a);
    if (r.mul(r.one(), x) != x) fail("unity", {x});
    if (r.add(x, 0) != x) fail("additive identity", {x});
    if (r.add(x, r.neg(x)) != 0) fail("additive inverse", {x});
  }
  for (auto a : basis)
    for (auto b : basis) {
      check_pair(a, b);
      for (auto c : basis) check_triple(a, b, c);
    }

  std::mt19937_64 rng(limits.seed ^ r.order());
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  if (n * n <= limits.exhaustive_triples * 16) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) check_pair(static_cast<Index>(a), static_cast<Index>(b));
  } else {
    for (std::size_t s = 0; s < limits.random_triples; ++s) check_pair(pick(rng), pick(rng));
  }
  if (n * n * n <= limits.exhaustive_triples) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          check_triple(static_cast<Index>(a), static_cast<Index>(b), static_cast<Index>(c));
  } else {
    for (std::size_t s = 0; s < limits.random_triples; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }
}

bool is_unit(const FiniteRing& r, Index a) {
  for (std::size_t b = 0; b < r.order(); ++b)
    if (r.mul(a, static_cast<Index>(b)) == r.one()) return true;
  return false;
}

bool is_nilpotent(const FiniteRing& r, Index a) {
  // a^k = 0 for some k <= n iff a^(2^j) = 0 with 2^j >= n.
  Index x = a;
  for (std::size_t k = 1; k < 2 * r.order(); k *= 2) {
    if (x == 0) return true;
    x = r.mul(x, x);
  }
  return x == 0;
}

bool is_zero_divisor(const FiniteRing& r, Index a) {
  for (std::size_t b = 1; b < r.order(); ++b)
    if (r.mul(a, static_cast<Index>(b)) == 0) return true;
  return false;
}

bool is_reduced(const FiniteRing& r) {
  for (std::size_t a = 1; a < r.order(); ++a)
    if (is_nilpotent(r, static_cast<Index>(a))) return false;
  return true;
}

bool is_field(const FiniteRing& r) {
  if (r.order() < 2) return false;
  for (std::size_t a = 1; a < r.order(); ++a)
    if (!is_unit(r, static_cast<Index>(a))) return false;
  return true;
}

Bitset unit_set(const FiniteRing& r) {
  Bitset s(r.order());
  for (std::size_t a = 0; a < r.order(); ++a)
    if (is_unit(r, static_cast<Index>(a))) s.set(a);
  return s;
}

Bitset nilpotent_set(const FiniteRing& r) {
  Bitset s(r.order());
  for (std::size_t a = 0; a < r.order(); ++a)
    if (is_nilpotent(r, static_cast<Index>(a))) s.set(a);
  return s;
}

RingRegistry::RingRegistry(const RingRegistry& other) {
  std::lock_guard<std::mutex> lock(other.mutex_);
  limits_ = other.limits_;
  order_ = other.order_;
  index_ = other.index_;
  built_ = other.built_;
}

void RingRegistry::add(RingPresentation p) {
  if (p.name.empty()) throw PresentationError("ring name must not be empty");
  if (contains(p.name)) throw PresentationError("duplicate ring name '" + p.name + "'");
  if (p.kind == PresentationKind::product) {
    if (p.components.size() < 2)
      throw PresentationError("product '" + p.name + "' needs at least two components");
    for (const auto& c : p.components)
      if (!contains(c))
        throw PresentationError("product '" + p.name + "' refers to undefined ring '" + c + "'");
  }
  index_.emplace(p.name, order_.size());
  order_.push_back(std::move(p));
}

const RingPresentation& RingRegistry::presentation(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw PresentationError("unknown ring '" + name + "'");
  return order_[it->second];
}

std::vector<RingPresentation> RingRegistry::closure(const std::string& name) const {
  std::set<std::size_t> needed;
  std::vector<std::string> stack{name};
  while (!stack.empty()) {
    const auto& p = presentation(stack.back());
    stack.pop_back();
    if (!needed.insert(index_.at(p.name)).second) continue;
    for (const auto& c : p.components) stack.push_back(c);
  }
  std::vector<RingPresentation> out;
  for (auto i : needed) out.push_back(order_[i]);
  return out;
}

RingPtr RingRegistry::build(const std::string& name) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = built_.find(name);
    if (it != built_.end()) return it->second;
  }
  RingPtr r = build_ring(presentation(name), *this);
  std::lock_guard<std::mutex> lock(mutex_);
  return built_.emplace(name, r).first->second;
}

RingPtr build_ring(const RingPresentation& p, const RingRegistry& registry) {
  switch (p.kind) {
    case PresentationKind::zn: return make_zn(p, registry.limits());
    case PresentationKind::algebra: return make_algebra(p, registry.limits());
    case PresentationKind::product: {
      std::vector<RingPtr> comps;
      for (const auto& c : p.components) comps.push_back(registry.build(c));
      return make_product(comps, registry.limits(), p.name);
    }
  }
  throw PresentationError("unknown presentation kind");
}

}  // namespace anngraph
