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

#ifndef ANNGRAPH_IDEAL_HPP_
#define ANNGRAPH_IDEAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "anngraph/bitset.hpp"
#include "anngraph/ring.hpp"

namespace anngraph {

/// An ideal stored as a membership bitset over the parent ring's element
/// indices, with a cached irredundant generating set used for labels.
class Ideal {
 public:
  /// `elements` must already be an ideal of `ring`; see is_ideal().
  Ideal(RingPtr ring, Bitset elements);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Bitset& elements() const { return elements_; }
  std::size_t size() const { return elements_.count(); }
  bool contains(Index a) const { return elements_.test(a); }
  bool is_zero() const { return elements_.count() == 1; }
  bool is_whole() const { return elements_.test(ring_->one()); }

  /// Greedy from the smallest element index, then pruned to be irredundant.
  const std::vector<Index>& generators() const { return generators_; }
  /// "(0)", "(2)", "(x, y+z)", ...
  std::string label() const;

  bool operator==(const Ideal& o) const {
    return ring_->id() == o.ring_->id() && elements_ == o.elements_;
  }

 private:
  RingPtr ring_;
  Bitset elements_;
  std::vector<Index> generators_;
};

bool is_ideal(const FiniteRing& ring, const Bitset& elements);

/// Additive subgroup generated by a subgroup `base` and the elements of
/// `extra`. When both are ideals the result is their sum.
Bitset subgroup_join(const FiniteRing& ring, Bitset base, const Bitset& extra);

Ideal zero_ideal(const RingPtr& ring);
Ideal whole_ideal(const RingPtr& ring);
Ideal principal_ideal(const RingPtr& ring, Index a);
Ideal ideal_from_generators(const RingPtr& ring, std::span<const Index> elems);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
Ideal ideal_power(const Ideal& i, unsigned k);
Ideal annihilator_ideal(const Ideal& i);
bool is_nilpotent_ideal(const Ideal& i);
bool is_prime_ideal(const Ideal& i);

RingPtr quotient(const Ideal& i, const RingLimits& limits = {});

/// Every ideal of a finite ring, sorted by (cardinality, lexicographic
/// member list), with inclusion and annihilator indices precomputed.
class IdealLattice {
 public:
  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const { return ideals_; }

  std::size_t zero_index() const { return 0; }
  std::size_t whole_index() const { return ideals_.size() - 1; }

  /// ideal i is contained in ideal j
  bool includes(std::size_t i, std::size_t j) const { return inclusion_[i].test(j); }
  std::optional<std::size_t> find(const Bitset& elements) const;
  std::size_t index_of(const Ideal& ideal) const;
  std::size_t annihilator_index(std::size_t i) const { return annihilator_[i]; }

  /// Lattice indices of the nonzero proper ideals, in lattice order.
  std::vector<std::size_t> proper_nonzero() const;

 private:
  friend IdealLattice enumerate_ideals(const RingPtr& ring, std::size_t budget);

  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::vector<Bitset> inclusion_;
  std::vector<std::size_t> annihilator_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> lookup_;
};

/// Closure of the principal ideals under pairwise sums. Throws
/// BudgetExceeded past `budget` ideals rather than truncating.
IdealLattice enumerate_ideals(const RingPtr& ring, std::size_t budget = 100000);

struct AnnihilatorCertificate {
  std::size_t ideal = 0;
  std::size_t annihilator = 0;
  std::optional<Index> witness;  // least nonzero c with cI = (0)
};

AnnihilatorCertificate annihilator(const IdealLattice& lattice, std::size_t i);
bool is_annihilating(const IdealLattice& lattice, std::size_t i);

std::vector<std::size_t> prime_indices(const IdealLattice& lattice);
std::vector<std::size_t> minimal_prime_indices(const IdealLattice& lattice);
std::vector<std::size_t> maximal_ideal_indices(const IdealLattice& lattice);
std::vector<Ideal> minimal_primes(const IdealLattice& lattice);
bool is_local(const IdealLattice& lattice);

/// The set of nilpotent elements (throws InvariantViolation if it is not an
/// ideal).
Ideal nilradical(const RingPtr& ring);
/// As above, also asserting Nil(R) equals the intersection of the minimal
/// primes.
Ideal nilradical(const IdealLattice& lattice);
/// Intersection of the maximal ideals; asserted equal to the nilradical.
Ideal jacobson_radical(const IdealLattice& lattice);

/// Z(R), zero included.
Bitset zero_divisor_set(const FiniteRing& ring);
bool zr_is_ideal(const FiniteRing& ring);

/// R-submodules of an ideal I are exactly the ideals J with J contained in I.
std::vector<std::size_t> submodules_of(const IdealLattice& lattice, std::size_t i);
std::size_t count_submodules(const IdealLattice& lattice, std::size_t i);

}  // namespace anngraph

#endif  // ANNGRAPH_IDEAL_HPP_
