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
#ifndef MATKIT_ADVERSARY_HPP_
#define MATKIT_ADVERSARY_HPP_

// Two paving matroids on 4t elements that answer every independence query
// identically except on one hidden parity set and its complement. One of
// them has no split into two parity bases, the other does, so any correct
// solver must query the hidden sets.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "matkit/certificates.hpp"
#include "matkit/constructions.hpp"
#include "matkit/instances.hpp"
#include "matkit/solvers.hpp"

namespace matkit {

struct AdversaryPair {
  std::size_t t = 0;
  PartitionOfGroundSet pairing;  // 2t pairs on 4t elements
  ElementSet hidden;             // a parity set of size 2t
  // Every parity set of size 2t is a dependent hyperplane.
  Matroid blocked;
  // Same, except the hidden set and its complement are bases.
  Matroid planted;
};

// Defaults: pairs {2i, 2i+1}, hidden set = the first t pairs. Throws
// DomainError if the pairing or hidden set is malformed.
AdversaryPair build_adversary(
    std::size_t t, const std::optional<PartitionOfGroundSet>& pairing = {},
    const std::optional<ElementSet>& hidden = {});

// All parity sets of size 2t for the pairing, in lexicographic order of the
// chosen pairs.
std::vector<ElementSet> parity_sets_of_half_size(
    const PartitionOfGroundSet& pairing);

// Number of choices for the hidden set: C(2t, t). t <= 16.
std::uint64_t count_parity_hiding_sets(std::size_t t);

// Every subset on which the two matroids disagree (full sweep, 4t <= 24).
std::vector<ElementSet> disagreement_sets(const AdversaryPair& pair);

enum class AdversaryTarget { kBlocked, kPlanted };

// A solver sees only the instance built on a logged copy of the target.
using QuerySolver =
    std::function<std::optional<Bipartition>(const ModularInstance&)>;

// Named solvers: "backtrack", "sweep", "exhaustive" (queries every subset
// in size order before deciding).
QuerySolver named_query_solver(const std::string& name);

struct ExperimentReport {
  std::size_t t = 0;
  AdversaryTarget target = AdversaryTarget::kBlocked;
  bool answered_yes = false;
  std::size_t total_queries = 0;
  // Position in the distinct-query log of the first hidden set or its
  // complement.
  std::optional<std::size_t> distinguishing_query_index;
  // Replaying the log, both matroids agree on every query before the
  // distinguishing one, and disagree only on the hidden sets.
  bool agreement_verified = false;
};

ExperimentReport run_indistinguishability(const AdversaryPair& pair,
                                          const QuerySolver& solver,
                                          AdversaryTarget target);

nlohmann::json to_json(const ExperimentReport& report);

}  // namespace matkit

#endif  // MATKIT_ADVERSARY_HPP_
