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

#ifndef ANNGRAPH_RING_HPP_
#define ANNGRAPH_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anngraph/bitset.hpp"
#include "anngraph/presentation.hpp"

namespace anngraph {

/// Element index inside a FiniteRing. Index 0 is always the zero element.
using Index = std::uint32_t;

struct RingLimits {
  std::size_t size_cap = 4096;
  // Rings up to this order get full addition/multiplication tables.
  std::size_t table_limit = 1024;
  // Exhaustive triple validation when order^3 fits; otherwise sampled.
  std::size_t exhaustive_triples = std::size_t{1} << 18;
  std::size_t random_triples = 100000;
  std::uint64_t seed = 0x5eed5eedULL;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A fully materialized finite commutative ring with identity. Immutable
/// once built; construct through make_zn / make_product / make_algebra /
/// quotient.
class FiniteRing {
 public:
  using BinaryOp = std::function<Index(Index, Index)>;

  std::size_t order() const { return order_; }
  Index zero() const { return 0; }
  Index one() const { return one_; }

  Index add(Index a, Index b) const {
    return add_table_.empty() ? add_fn_(a, b) : add_table_[std::size_t{a} * order_ + b];
  }
  Index mul(Index a, Index b) const {
    return mul_table_.empty() ? mul_fn_(a, b) : mul_table_[std::size_t{a} * order_ + b];
  }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg_[b]); }
  Index power(Index a, std::uint64_t e) const;

  const std::string& name() const { return name_; }
  /// Null for rings that have no presentation (quotients).
  const RingPresentation* presentation() const {
    return presentation_ ? &*presentation_ : nullptr;
  }
  std::string label(Index a) const;

  /// Mixed-radix coordinates, first coordinate least significant. For Z_m
  /// and algebras these are the coefficients (c_0 mod m; c_k mod ord_k); for
  /// products they are component indices; quotients use one coordinate.
  std::span<const std::uint32_t> radices() const { return radices_; }
  std::vector<std::uint32_t> decode(Index a) const;
  Index encode(std::span<const std::uint32_t> coords) const;

  /// Evaluates c_0 + sum c_k g_k (Z_m and algebra rings only).
  Index element(const LinearExpr& expr) const;
  std::optional<Index> find_label(const std::string& label) const;

  bool has_tables() const { return !mul_table_.empty(); }
  std::uint64_t id() const { return id_; }
  const std::vector<RingPtr>& components() const { return components_; }

 private:
  friend class RingBuilder;
  FiniteRing() = default;

  std::uint64_t id_ = 0;
  std::string name_;
  std::optional<RingPresentation> presentation_;
  std::size_t order_ = 0;
  Index one_ = 0;
  std::vector<std::uint32_t> radices_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  BinaryOp add_fn_;
  BinaryOp mul_fn_;
  std::vector<Index> neg_;
  std::vector<std::string> labels_;
  std::vector<Generator> generators_;  // algebra rings
  std::vector<RingPtr> components_;    // product rings
  RingPtr parent_;                     // quotient rings
};

RingPtr make_zn(std::uint32_t m, const RingLimits& limits = {});
RingPtr make_zn(const RingPresentation& p, const RingLimits& limits = {});
RingPtr make_product(std::span<const RingPtr> components, const RingLimits& limits = {},
                     std::string name = {});
RingPtr make_algebra(const RingPresentation& p, const RingLimits& limits = {});

/// R / I for a proper ideal given by its element set. Cosets are numbered by
/// their least element index, so coset 0 holds zero.
RingPtr quotient(const RingPtr& ring, const Bitset& ideal, const RingLimits& limits = {});

/// Exhaustive (small rings) or sampled check of the ring axioms. Throws
/// AxiomViolation naming the offending elements.
void validate_ring_axioms(const FiniteRing& ring, const RingLimits& limits,
                          std::span<const Index> basis = {});

bool is_unit(const FiniteRing& r, Index a);
bool is_nilpotent(const FiniteRing& r, Index a);
bool is_zero_divisor(const FiniteRing& r, Index a);
bool is_reduced(const FiniteRing& r);
bool is_field(const FiniteRing& r);

Bitset unit_set(const FiniteRing& r);
Bitset nilpotent_set(const FiniteRing& r);

/// Named presentations in definition order, with memoized construction.
class RingRegistry {
 public:
  explicit RingRegistry(RingLimits limits = {}) : limits_(limits) {}

  RingRegistry(const RingRegistry& other);
  RingRegistry& operator=(const RingRegistry&) = delete;

  /// Rejects duplicate names and products naming undefined components.
  void add(RingPresentation p);
  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  const RingPresentation& presentation(const std::string& name) const;
  const std::vector<RingPresentation>& presentations() const { return order_; }
  /// The named presentation preceded by everything it depends on.
  std::vector<RingPresentation> closure(const std::string& name) const;

  RingPtr build(const std::string& name) const;
  const RingLimits& limits() const { return limits_; }

 private:
  RingLimits limits_;
  std::vector<RingPresentation> order_;
  std::map<std::string, std::size_t> index_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, RingPtr> built_;
};

RingPtr build_ring(const RingPresentation& p, const RingRegistry& registry);

}  // namespace anngraph

#endif  // ANNGRAPH_RING_HPP_
