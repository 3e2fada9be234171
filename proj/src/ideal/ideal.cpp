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

#include "anngraph/ideal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "anngraph/errors.hpp"

namespace anngraph {

namespace {

Bitset principal_bits(const FiniteRing& r, Index a) {
  Bitset s(r.order());
  for (std::size_t x = 0; x < r.order(); ++x) s.set(r.mul(static_cast<Index>(x), a));
  return s;
}

// H + <t> for a subgroup H.
void adjoin(const FiniteRing& r, Bitset& h, Index t) {
  if (h.test(t)) return;
  const auto base = h.to_vector();
  Index x = t;
  while (!h.test(x)) {
    for (auto b : base) h.set(r.add(static_cast<Index>(b), x));
    x = r.add(x, t);
  }
}

Bitset generated_by(const FiniteRing& r, std::span<const Index> gens) {
  Bitset s(r.order());
  s.set(0);
  for (auto g : gens)
    if (!s.test(g)) s = subgroup_join(r, std::move(s), principal_bits(r, g));
  return s;
}

Bitset annihilator_bits(const FiniteRing& r, std::span<const Index> gens) {
  Bitset s(r.order());
  s.set_all();
  for (auto g : gens)
    for (std::size_t x = 0; x < r.order(); ++x)
      if (s.test(x) && r.mul(static_cast<Index>(x), g) != 0) s.reset(x);
  return s;
}

void require_same_ring(const Ideal& i, const Ideal& j) {
  if (i.ring().id() != j.ring().id())
    throw RingMismatch("ideals of different rings ('" + i.ring().name() + "' and '" + j.ring().name() + "')");
}

}  // namespace

Ideal::Ideal(RingPtr ring, Bitset elements) : ring_(std::move(ring)), elements_(std::move(elements)) {
  if (elements_.size() != ring_->order()) throw RingMismatch("ideal bitset width differs from ring order");
  const FiniteRing& r = *ring_;
  Bitset cur(r.order());
  cur.set(0);
  elements_.for_each([&](std::size_t x) {
    if (!cur.test(x)) {
      generators_.push_back(static_cast<Index>(x));
      cur = subgroup_join(r, std::move(cur), principal_bits(r, static_cast<Index>(x)));
    }
  });
  for (std::size_t k = 0; k < generators_.size() && generators_.size() > 1;) {
    std::vector<Index> rest = generators_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (generated_by(r, rest) == elements_)
      generators_ = std::move(rest);
    else
      ++k;
  }
}

std::string Ideal::label() const {
  if (generators_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) s += (k ? ", " : "") + ring_->label(generators_[k]);
  return s + ")";
}

bool is_ideal(const FiniteRing& r, const Bitset& e) {
  if (e.size() != r.order() || !e.test(0)) return false;
  const auto members = e.to_vector();
  for (auto a : members) {
    for (auto b : members)
      if (!e.test(r.add(static_cast<Index>(a), static_cast<Index>(b)))) return false;
    for (std::size_t x = 0; x < r.order(); ++x)
      if (!e.test(r.mul(static_cast<Index>(x), static_cast<Index>(a)))) return false;
  }
  return true;
}

Bitset subgroup_join(const FiniteRing& r, Bitset base, const Bitset& extra) {
  extra.for_each([&](std::size_t t) { adjoin(r, base, static_cast<Index>(t)); });
  return base;
}

Ideal zero_ideal(const RingPtr& ring) {
  Bitset s(ring->order());
  s.set(0);
  return Ideal(ring, std::move(s));
}

Ideal whole_ideal(const RingPtr& ring) {
  Bitset s(ring->order());
  s.set_all();
  return Ideal(ring, std::move(s));
}

Ideal principal_ideal(const RingPtr& ring, Index a) {
  if (a >= ring->order()) throw std::out_of_range("element index out of range");
  return Ideal(ring, principal_bits(*ring, a));
}

Ideal ideal_from_generators(const RingPtr& ring, std::span<const Index> elems) {
  for (auto a : elems)
    if (a >= ring->order()) throw std::out_of_range("element index out of range");
  return Ideal(ring, generated_by(*ring, elems));
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  return Ideal(i.ring_ptr(), subgroup_join(i.ring(), i.elements(), j.elements()));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const FiniteRing& r = i.ring();
  // IJ is generated by the products of generators.
  std::vector<Index> prods;
  for (auto a : i.generators())
    for (auto b : j.generators()) prods.push_back(r.mul(a, b));
  return Ideal(i.ring_ptr(), generated_by(r, prods));
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  return Ideal(i.ring_ptr(), i.elements() & j.elements());
}

Ideal ideal_power(const Ideal& i, unsigned k) {
  Ideal p = whole_ideal(i.ring_ptr());
  for (unsigned s = 0; s < k; ++s) p = ideal_product(p, i);
  return p;
}

Ideal annihilator_ideal(const Ideal& i) {
  return Ideal(i.ring_ptr(), annihilator_bits(i.ring(), i.generators()));
}

bool is_nilpotent_ideal(const Ideal& i) {
  Ideal p = i;
  while (!p.is_zero()) {
    Ideal next = ideal_product(p, i);
    if (next == p) return false;
    p = std::move(next);
  }
  return true;
}

bool is_prime_ideal(const Ideal& i) {
  if (i.is_whole()) throw std::invalid_argument("primality is defined for proper ideals only");
  const FiniteRing& r = i.ring();
  Bitset outside(r.order());
  outside.set_all();
  outside -= i.elements();
  const auto rest = outside.to_vector();
  for (std::size_t p = 0; p < rest.size(); ++p)
    for (std::size_t q = p; q < rest.size(); ++q)
      if (i.contains(r.mul(static_cast<Index>(rest[p]), static_cast<Index>(rest[q])))) return false;
  return true;
}

RingPtr quotient(const Ideal& i, const RingLimits& limits) {
  return quotient(i.ring_ptr(), i.elements(), limits);
}

std::optional<std::size_t> IdealLattice::find(const Bitset& elements) const {
  auto it = lookup_.find(elements);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdealLattice::index_of(const Ideal& ideal) const {
  if (ideal.ring().id() != ring_->id()) throw RingMismatch("ideal belongs to a different ring");
  auto idx = find(ideal.elements());
  if (!idx) throw InvariantViolation("ideal " + ideal.label() + " missing from the lattice");
  return *idx;
}

std::vector<std::size_t> IdealLattice::proper_nonzero() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < ideals_.size(); ++i) out.push_back(i);
  return out;
}

IdealLattice enumerate_ideals(const RingPtr& ring, std::size_t budget) {
  const FiniteRing& r = *ring;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  std::vector<Bitset> found;
  std::vector<Bitset> principals;
  auto admit = [&](Bitset b) -> bool {
    if (seen.count(b)) return false;
    if (found.size() >= budget)
      throw BudgetExceeded("ring '" + r.name() + "' has more than " + std::to_string(budget) + " ideals");
    seen.emplace(b, found.size());
    found.push_back(std::move(b));
    return true;
  };
  for (std::size_t a = 0; a < r.order(); ++a) {
    Bitset p = principal_bits(r, static_cast<Index>(a));
    if (admit(p)) principals.push_back(std::move(p));
  }
  // Every ideal of a finite ring is a finite sum of principal ideals.
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& p : principals) {
      if (p.is_subset_of(found[k])) continue;
      admit(subgroup_join(r, found[k], p));
    }
  }

  std::sort(found.begin(), found.end(), [](const Bitset& a, const Bitset& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    return ca != cb ? ca < cb : Bitset::lex_less(a, b);
  });

  IdealLattice lat;
  lat.ring_ = ring;
  lat.ideals_.reserve(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) {
    lat.lookup_.emplace(found[k], k);
    lat.ideals_.emplace_back(ring, found[k]);
  }
  const std::size_t m = found.size();
  lat.inclusion_.assign(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (found[i].is_subset_of(found[j])) lat.inclusion_[i].set(j);
  lat.annihilator_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto ann = annihilator_bits(r, lat.ideals_[i].generators());
    auto idx = lat.find(ann);
    if (!idx) throw InvariantViolation("Ann" + lat.ideals_[i].label() + " is not an ideal of the lattice");
    lat.annihilator_[i] = *idx;
  }
  if (lat.ideals_.front().size() != 1 || !lat.ideals_.back().is_whole())
    throw InvariantViolation("lattice of '" + r.name() + "' lacks (0) or R");
  return lat;
}

AnnihilatorCertificate annihilator(const IdealLattice& lattice, std::size_t i) {
  AnnihilatorCertificate cert;
  cert.ideal = i;
  cert.annihilator = lattice.annihilator_index(i);
  const Ideal& ann = lattice[cert.annihilator];
  const std::size_t c = ann.elements().find_next(0);
  if (c != Bitset::npos) {
    const auto w = static_cast<Index>(c);
    bool kills = true;
    lattice[i].elements().for_each([&](std::size_t a) {
      if (lattice.ring().mul(w, static_cast<Index>(a)) != 0) kills = false;
    });
    if (!kills) throw InvariantViolation("annihilator witness does not annihilate " + lattice[i].label());
    cert.witness = w;
  }
  return cert;
}

bool is_annihilating(const IdealLattice& lattice, std::size_t i) {
  return lattice.annihilator_index(i) != lattice.zero_index();
}

std::vector<std::size_t> prime_indices(const IdealLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < lattice.size(); ++i)
    if (is_prime_ideal(lattice[i])) out.push_back(i);
  return out;
}

std::vector<std::size_t> minimal_prime_indices(const IdealLattice& lattice) {
  const auto primes = prime_indices(lattice);
  std::vector<std::size_t> out;
  for (auto p : primes) {
    bool minimal = true;
    for (auto q : primes)
      if (q != p && lattice.includes(q, p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> maximal_ideal_indices(const IdealLattice& lattice) {
  std::vector<std::size_t> out;
  const std::size_t whole = lattice.whole_index();
  for (std::size_t i = 0; i < whole; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < whole && maximal; ++j)
      if (j != i && lattice.includes(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<Ideal> minimal_primes(const IdealLattice& lattice) {
  std::vector<Ideal> out;
  for (auto i : minimal_prime_indices(lattice)) out.push_back(lattice[i]);
  return out;
}

bool is_local(const IdealLattice& lattice) { return maximal_ideal_indices(lattice).size() == 1; }

Ideal nilradical(const RingPtr& ring) {
  Bitset nil = nilpotent_set(*ring);
  if (!is_ideal(*ring, nil)) throw InvariantViolation("nilpotent elements of '" + ring->name() + "' do not form an ideal");
  return Ideal(ring, std::move(nil));
}

Ideal nilradical(const IdealLattice& lattice) {
  Ideal nil = nilradical(lattice.ring_ptr());
  Bitset meet(lattice.ring().order());
  meet.set_all();
  for (auto p : minimal_prime_indices(lattice)) meet &= lattice[p].elements();
  if (meet != nil.elements())
    throw InvariantViolation("Nil(R) differs from the intersection of minimal primes in '" +
                             lattice.ring().name() + "'");
  return nil;
}

Ideal jacobson_radical(const IdealLattice& lattice) {
  Bitset meet(lattice.ring().order());
  meet.set_all();
  for (auto m : maximal_ideal_indices(lattice)) meet &= lattice[m].elements();
  Ideal jac(lattice.ring_ptr(), std::move(meet));
  if (jac.elements() != nilpotent_set(lattice.ring()))
    throw InvariantViolation("J(R) differs from Nil(R) in '" + lattice.ring().name() + "'");
  return jac;
}

Bitset zero_divisor_set(const FiniteRing& r) {
  Bitset z(r.order());
  for (std::size_t a = 0; a < r.order(); ++a)
    if (is_zero_divisor(r, static_cast<Index>(a))) z.set(a);
  return z;
}

bool zr_is_ideal(const FiniteRing& r) { return is_ideal(r, zero_divisor_set(r)); }

std::vector<std::size_t> submodules_of(const IdealLattice& lattice, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < lattice.size(); ++j)
    if (lattice.includes(j, i)) out.push_back(j);
  return out;
}

std::size_t count_submodules(const IdealLattice& lattice, std::size_t i) {
  return submodules_of(lattice, i).size();
}

}  // namespace anngraph
