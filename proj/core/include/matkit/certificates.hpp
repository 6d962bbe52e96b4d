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
#ifndef MATKIT_CERTIFICATES_HPP_
#define MATKIT_CERTIFICATES_HPP_

// Polynomial-time checks of YES certificates. Verifiers test the defining
// conditions only and never search.

#include <cstddef>
#include <string>
#include <vector>

#include "matkit/element_set.hpp"
#include "matkit/graphs.hpp"
#include "matkit/instances.hpp"

namespace matkit {

struct Verdict {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
  static Verdict yes() { return {true, "ok"}; }
  static Verdict no(std::string why) { return {false, std::move(why)}; }
};

// Two classes splitting a ground set.
struct Bipartition {
  ElementSet first;
  ElementSet second;
  bool operator==(const Bipartition&) const = default;
};

struct CommonBasesCertificate {
  std::vector<ElementSet> classes;
  bool operator==(const CommonBasesCertificate&) const = default;
};

Verdict verify_common_bases(const CommonBasesInstance& inst,
                            const CommonBasesCertificate& cert);
Verdict verify_modular_bases(const ModularInstance& inst,
                             const Bipartition& cert);
Verdict verify_parity_bases(const ParityInstance& inst, const Bipartition& cert);
// Both classes are spanning trees made of whole modules.
Verdict verify_modular_trees(const MultiGraph& g,
                             const PartitionOfGroundSet& modules,
                             const Bipartition& cert);
Verdict verify_nae_assignment(const CnfFormula& formula,
                              const std::vector<bool>& values);
// Arc indices forming vertex-disjoint even directed cycles covering all
// vertices.
Verdict verify_perfect_even_factor(const Digraph& d,
                                   const std::vector<std::size_t>& arcs);
// Edge indices forming a 2-factor whose cycle lengths are multiples of 4.
Verdict verify_c4k2_two_factor(const BipartiteGraph& g,
                               const std::vector<std::size_t>& edges);

// Lengths of the cycles formed by a set of arcs in which every vertex has
// in- and out-degree 1; empty when that fails.
std::vector<std::size_t> cycle_cover_lengths(const Digraph& d,
                                             const std::vector<std::size_t>& arcs);

}  // namespace matkit

#endif  // MATKIT_CERTIFICATES_HPP_
