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

#ifndef ANNGRAPH_CORPUS_HPP_
#define ANNGRAPH_CORPUS_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "anngraph/analysis.hpp"
#include "anngraph/presentation.hpp"
#include "anngraph/ring.hpp"

namespace anngraph {

enum class Family { zn, product, algebra, examples };
std::string_view to_string(Family f);
/// Throws std::invalid_argument for unknown names.
Family family_from_string(std::string_view name);
std::vector<Family> all_families();

/// Z_4[x,y,z] with x^2 = y^2 = yz = 2, z^2 = xy = xz = 0, 2x = 2y = 2z = 0:
/// the local ring of order 32 whose zero-divisor graph has chromatic number
/// 5 but clique number 4. Named "AN".
RingPresentation chromatic_gap_algebra();
/// Fixed small algebras: the order-32 ring above, dual numbers over Z_2 and
/// Z_4, Z_2[x,y]/(x,y)^2, F_4, F_8 and F_4 x Z_4. Helper presentations they
/// depend on (Z4 for the product) are not included.
std::vector<RingPresentation> algebra_family();
/// Ring names every report built from `algebra_family` depends on, with
/// their presentations, in definition order.
std::vector<RingPresentation> algebra_family_with_helpers();

/// Names of the rings quoted as worked examples: AN, Z8, Z27, Z125, Z4,
/// Z2[y]/(y^2) and Z2xZ4.
std::vector<std::string> worked_example_names();

std::size_t presentation_order(const RingPresentation& p, const RingRegistry& registry);

struct CorpusEntry {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> tags;  // sorted family names
};

struct RingCorpus {
  std::shared_ptr<RingRegistry> registry;  // targets plus helper components
  std::vector<CorpusEntry> entries;        // sorted by name
  std::size_t max_order = 0;
  std::vector<Family> families;
};

/// Deterministic corpus:
///   zn       composite n with 4 <= n <= max_order;
///   product  2 to 4 factors Z_{p^k}, total order <= max_order;
///   algebra  the fixed algebra list, filtered by max_order;
///   examples the worked examples, regardless of max_order.
/// Throws CapExceeded when max_order exceeds the ring size cap.
RingCorpus generate_corpus(std::size_t max_order, const std::vector<Family>& families,
                           const RingLimits& limits = {});

struct ScanOptions {
  AnalysisOptions analysis;
  unsigned jobs = 1;
};

/// Analyses of every corpus ring, in corpus order. Work is spread over
/// `jobs` threads; the first failure in corpus order is rethrown.
std::vector<RingAnalysis> analyze_corpus(const RingCorpus& corpus, const ScanOptions& options);

Json corpus_json(const RingCorpus& corpus);

/// chi(AG) = cl(AG) on every ring, with certificates for any exception and a
/// log of how cl(AG) compares with cl(Gamma).
Json scan_clique_chromatic(const RingCorpus& corpus, const std::vector<RingAnalysis>& analyses);
/// Rings whose zero-divisor graph has diameter 2 while AG has diameter 3.
Json scan_diameter_gap(const RingCorpus& corpus, const std::vector<RingAnalysis>& analyses);

}  // namespace anngraph

#endif  // ANNGRAPH_CORPUS_HPP_
