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

#include "anngraph/presentation.hpp"

#include <utility>

namespace anngraph {

std::string_view to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::zn: return "zn";
    case PresentationKind::product: return "product";
    case PresentationKind::algebra: return "algebra";
  }
  return "?";
}

RingPresentation RingPresentation::zn(std::string name, std::uint32_t m) {
  RingPresentation p;
  p.name = std::move(name);
  p.kind = PresentationKind::zn;
  p.modulus = m;
  return p;
}

RingPresentation RingPresentation::product(std::string name, std::vector<std::string> components) {
  RingPresentation p;
  p.name = std::move(name);
  p.kind = PresentationKind::product;
  p.components = std::move(components);
  return p;
}

RingPresentation RingPresentation::algebra(std::string name, std::uint32_t base,
                                           std::vector<Generator> generators,
                                           std::vector<Relation> relations) {
  RingPresentation p;
  p.name = std::move(name);
  p.kind = PresentationKind::algebra;
  p.modulus = base;
  p.generators = std::move(generators);
  p.relations = std::move(relations);
  return p;
}

}  // namespace anngraph
