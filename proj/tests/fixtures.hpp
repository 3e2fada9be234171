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

// Small ring builders shared by the unit tests.

#ifndef ANNGRAPH_TESTS_FIXTURES_HPP_
#define ANNGRAPH_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "anngraph/presentation.hpp"
#include "anngraph/ring.hpp"

namespace fixtures {

using namespace anngraph;

inline LinearExpr expr(std::int64_t constant, std::vector<std::pair<std::int64_t, std::string>> terms = {}) {
  LinearExpr e;
  e.constant = constant;
  for (auto& [c, s] : terms) e.terms.push_back(Term{c, s});
  return e;
}

inline Relation rel(std::string a, std::string b, LinearExpr value) {
  return Relation{std::move(a), std::move(b), std::move(value)};
}

inline RingPtr zn(std::uint32_t m) { return make_zn(m); }

inline RingPtr product_of(std::initializer_list<std::uint32_t> moduli) {
  std::vector<RingPtr> parts;
  for (auto m : moduli) parts.push_back(make_zn(m));
  return make_product(parts);
}

// Z_4[x,y,z] with x^2 = y^2 = yz = 2, z^2 = xy = xz = 0 and 2x = 2y = 2z = 0.
inline RingPresentation four_by_three() {
  return RingPresentation::algebra(
      "Z4[x,y,z]", 4, {{"x", 2}, {"y", 2}, {"z", 2}},
      {rel("x", "x", expr(2)), rel("y", "y", expr(2)), rel("z", "z", expr(0)), rel("x", "y", expr(0)),
       rel("x", "z", expr(0)), rel("y", "z", expr(2))});
}

inline RingPresentation dual_numbers(std::uint32_t base, std::uint32_t ord) {
  return RingPresentation::algebra("Z" + std::to_string(base) + "[e]", base, {{"e", ord}},
                                   {rel("e", "e", expr(0))});
}

// F_4 = Z_2[a]/(a^2 + a + 1).
inline RingPresentation f4() {
  return RingPresentation::algebra("F4", 2, {{"a", 2}}, {rel("a", "a", expr(1, {{1, "a"}}))});
}

// F_8 with a = t, b = t^2 where t^3 = t + 1.
inline RingPresentation f8() {
  return RingPresentation::algebra(
      "F8", 2, {{"a", 2}, {"b", 2}},
      {rel("a", "a", expr(0, {{1, "b"}})), rel("a", "b", expr(1, {{1, "a"}})),
       rel("b", "b", expr(0, {{1, "a"}, {1, "b"}}))});
}

}  // namespace fixtures

#endif  // ANNGRAPH_TESTS_FIXTURES_HPP_
