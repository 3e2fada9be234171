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

#ifndef ANNGRAPH_PRESENTATION_HPP_
#define ANNGRAPH_PRESENTATION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anngraph {

enum class PresentationKind { zn, product, algebra };

std::string_view to_string(PresentationKind kind);

struct Term {
  std::int64_t coefficient = 0;
  std::string symbol;
  bool operator==(const Term&) const = default;
};

/// c_0 + sum c_k * g_k. Terms keep their written order.
struct LinearExpr {
  std::int64_t constant = 0;
  std::vector<Term> terms;
  bool operator==(const LinearExpr&) const = default;
};

struct Generator {
  std::string symbol;
  std::uint32_t additive_order = 0;
  bool operator==(const Generator&) const = default;
};

/// left * right = value. Each unordered generator pair appears once.
struct Relation {
  std::string left;
  std::string right;
  LinearExpr value;
  bool operator==(const Relation&) const = default;
};

/// How to build one ring. Products refer to other presentations by name;
/// algebras are free Z_m-modules on {1, g_1, ...} with a symmetric product
/// table on the generators.
struct RingPresentation {
  std::string name;
  PresentationKind kind = PresentationKind::zn;
  std::uint32_t modulus = 0;            // zn modulus, or algebra base modulus
  std::vector<std::string> components;  // product only
  std::vector<Generator> generators;    // algebra only
  std::vector<Relation> relations;      // algebra only

  bool operator==(const RingPresentation&) const = default;

  static RingPresentation zn(std::string name, std::uint32_t m);
  static RingPresentation product(std::string name, std::vector<std::string> components);
  static RingPresentation algebra(std::string name, std::uint32_t base,
                                  std::vector<Generator> generators,
                                  std::vector<Relation> relations);
};

}  // namespace anngraph

#endif  // ANNGRAPH_PRESENTATION_HPP_
