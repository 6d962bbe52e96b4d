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
#ifndef MATKIT_SOLVERS_HPP_
#define MATKIT_SOLVERS_HPP_

// Exact decision procedures for desk-scale instances. Every solver returns
// a certificate on YES and nullopt on NO, and throws ResourceLimitError when
// the instance exceeds its cap.

#include <cstddef>
#include <optional>
#include <vector>

#include "matkit/certificates.hpp"
#include "matkit/graphs.hpp"
#include "matkit/instances.hpp"

namespace matkit {

enum class SolveStrategy {
  kAuto,       // per-solver default
  kSweep,      // enumerate every candidate split
  kBacktrack,  // extend partial splits, pruning on independence
};

struct SolveOptions {
  // Overrides the solver's default cap when set.
  std::optional<std::size_t> cap;
  std::size_t threads = 0;  // 0 = hardware concurrency
  SolveStrategy strategy = SolveStrategy::kAuto;
};

// Default caps, in the unit each solver bounds.
inline constexpr std::size_t kCommonBasesCap = 24;      // ground elements
inline constexpr std::size_t kModuleCap = 24;           // modules
inline constexpr std::size_t kNaeVariableCap = 24;      // variables
inline constexpr std::size_t kEvenFactorCap = 12;       // vertices
inline constexpr std::size_t kTwoFactorSlackCap = 24;   // |E| - |V|

// k = 2 sweeps splits with element 0 fixed in the first class (the default);
// otherwise backtracks, opening at most one new class per element.
std::optional<CommonBasesCertificate> solve_common_bases(
    const CommonBasesInstance& inst, const SolveOptions& options = {});

// Module 0 is fixed in the first class. NO whenever |S| != 2 rank(S).
std::optional<Bipartition> solve_modular_bases(const ModularInstance& inst,
                                               const SolveOptions& options = {});

std::optional<Bipartition> solve_parity_bases(const ParityInstance& inst,
                                              const SolveOptions& options = {});

// NO unless |E| = 2(|V| - 1); otherwise modular bases of the cycle matroid.
std::optional<Bipartition> solve_modular_trees(
    const MultiGraph& g, const PartitionOfGroundSet& modules,
    const SolveOptions& options = {});

// Sweeps assignments with x_1 = true; an assignment works iff its
// complement does.
std::optional<std::vector<bool>> solve_naesat(const CnfFormula& formula,
                                              const SolveOptions& options = {});

// Arc indices (ascending) of a perfect even factor.
std::optional<std::vector<std::size_t>> solve_perfect_even_factor(
    const Digraph& d, const SolveOptions& options = {});

// Edge indices (ascending) of a 2-factor with all cycle lengths divisible
// by 4.
std::optional<std::vector<std::size_t>> solve_c4k2_two_factor(
    const BipartiteGraph& g, const SolveOptions& options = {});

}  // namespace matkit

#endif  // MATKIT_SOLVERS_HPP_
