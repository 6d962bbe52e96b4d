// Copyright 2023 The Authors.
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
#ifndef MATKIT_TESTS_SUPPORT_ROUNDTRIP_HPP_
#define MATKIT_TESTS_SUPPORT_ROUNDTRIP_HPP_

// Round-trip suites for the reductions. Each instance is decided on both
// sides; when the source is YES its witness is lifted and verified, and the
// output witness is pulled back and verified. Size laws are checked on
// every instance.

#include <cstddef>
#include <string>
#include <vector>

#include "matkit/instances.hpp"
#include "random_instances.hpp"

namespace matkit::testing {

struct RoundTripStats {
  std::size_t instances = 0;
  std::size_t yes = 0;
  std::size_t answer_mismatches = 0;
  std::size_t certificate_failures = 0;
  std::size_t size_law_failures = 0;
  std::string first_problem;

  bool clean() const {
    return instances > 0 && answer_mismatches == 0 && certificate_failures == 0 &&
           size_law_failures == 0;
  }
  void merge(const RoundTripStats& o);
  std::string summary() const;
};

// Every normalized formula with 0..max_vars variables and 0..max_clauses
// clauses, one per multiset of clauses.
std::vector<CnfFormula> all_normalized_formulas(std::size_t max_vars,
                                                std::size_t max_clauses);

// Every digraph on exactly `vertices` vertices, or every balanced bipartite
// graph with `side` vertices per side.
std::vector<brute::EdgeList> all_arc_sets(std::size_t vertices);
std::vector<brute::EdgeList> all_bipartite_edge_sets(std::size_t side);

// A random matroid on n elements with rank n / 2 (n even).
Matroid random_balanced_matroid(Rng& rng, std::size_t n);

RoundTripStats roundtrip_modular_to_common(const ModularInstance& inst);
RoundTripStats roundtrip_naesat_to_trees(const CnfFormula& formula);
RoundTripStats roundtrip_even_factor(std::size_t vertices, const brute::EdgeList& arcs);
RoundTripStats roundtrip_two_factor(std::size_t side, const brute::EdgeList& edges);
RoundTripStats roundtrip_partition_normal_form(const CommonBasesInstance& inst);

}  // namespace matkit::testing

#endif  // MATKIT_TESTS_SUPPORT_ROUNDTRIP_HPP_
