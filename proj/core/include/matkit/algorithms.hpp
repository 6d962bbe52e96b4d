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
#ifndef MATKIT_ALGORITHMS_HPP_
#define MATKIT_ALGORITHMS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matkit/element_set.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

// Maximum-cardinality common independent set of two matroids on the same
// ground set. Augments along shortest paths of the exchange graph; ties are
// broken towards the lowest element index, so the result is deterministic.
ElementSet max_common_independent(const Matroid& m1, const Matroid& m2);

// Partition of the ground set into k sets independent in m (some possibly
// empty), or nullopt when none exists. Decided by intersecting the k-fold
// copy sum of m with the partition matroid that takes one copy per element.
std::optional<std::vector<ElementSet>> partition_into_independent(
    const Matroid& m, std::size_t k);

struct NecessaryCondition {
  bool passed = false;
  bool size_condition = false;  // |S| = k r1(S) = k r2(S)
  bool m1_partitionable = false;
  bool m2_partitionable = false;
  std::string reason;
};

// Necessary condition for a partition into k common bases. Passing does not
// imply that such a partition exists.
NecessaryCondition common_bases_necessary_check(const Matroid& m1,
                                                const Matroid& m2,
                                                std::size_t k);

}  // namespace matkit

#endif  // MATKIT_ALGORITHMS_HPP_
