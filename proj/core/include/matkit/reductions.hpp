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
#ifndef MATKIT_REDUCTIONS_HPP_
#define MATKIT_REDUCTIONS_HPP_

// Instance transformations between the partition problems, each with maps
// that carry certificates across in both directions. Every map that takes a
// certificate verifies it first and throws PreconditionError if it fails.
// Each result carries a provenance list naming the role of every output
// element (or edge).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matkit/certificates.hpp"
#include "matkit/gadget.hpp"
#include "matkit/graphs.hpp"
#include "matkit/instances.hpp"
#include "matkit/solvers.hpp"

namespace matkit {

// --- Modular bases -> common bases of two matroids ------------------------
//
// Output ground set: the source elements first (same indices), then one
// gadget copy of 9|P| elements per module P, in module order. The first
// matroid is the direct sum of the source matroid and the first gadget
// matroids, truncated to half the ground set. The second matroid is the
// direct sum over modules of (free matroid on P plus the second gadget
// matroid), each truncated to 5|P|.
struct ModularToCommonResult {
  ModularInstance source;
  CommonBasesInstance instance;
  GadgetBlockLabeling labeling;
  std::vector<std::size_t> gadget_offset;  // first gadget element per module
  std::vector<std::string> provenance;
};

// Throws PreconditionError unless |S| = 2 rank(S).
ModularToCommonResult reduce_modular_to_common(
    const ModularInstance& inst,
    const GadgetBlockLabeling& labeling = certified_labeling());

// Restricts both classes to the source elements.
Bipartition pull_common_to_modular(const ModularToCommonResult& r,
                                   const CommonBasesCertificate& cert);

// Completes each module's gadget with the standard 5/4 split, putting the
// 4|P| side with the class that holds P.
CommonBasesCertificate lift_modular_to_common(const ModularToCommonResult& r,
                                              const Bipartition& cert);

// Exact solver for a reduction output too large for a plain sweep. A split
// of the output is feasible iff its source part X has X and S - X
// independent and, for every module P, each gadget receives a class of an
// achievable size given |X & P|. Sweeps X (cap on |S|) and checks the sizes
// against achievable_class_sizes; the returned certificate is verified.
std::optional<CommonBasesCertificate> solve_modular_to_common_output(
    const ModularToCommonResult& r, const SolveOptions& options = {});

// --- NAE-SAT -> modular spanning trees ------------------------------------

struct NaeToTreesResult {
  CnfFormula formula;  // normalized
  MultiGraph graph;
  PartitionOfGroundSet modules;
  ModularInstance instance;  // cycle matroid of `graph` with `modules`
  // Per variable: edge index of the single s-t edge standing in for an
  // empty positive / negative path, or npos when the path is nonempty.
  std::vector<std::size_t> positive_st_edge;
  std::vector<std::size_t> negative_st_edge;
  // Per variable: module index of the positive / negative path (or of the
  // s-t edge), and of each pair module along it.
  std::vector<std::size_t> positive_module;
  std::vector<std::size_t> negative_module;
  std::vector<std::vector<std::size_t>> positive_pairs;
  std::vector<std::vector<std::size_t>> negative_pairs;
  // Per clause: edge k joins the attachment vertices of literals k-1 and k
  // (cyclically).
  std::vector<std::vector<std::size_t>> clause_edges;
  std::vector<std::string> provenance;  // per edge
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Normalizes the formula first (see normalize()).
NaeToTreesResult reduce_naesat_to_modular_trees(const CnfFormula& formula);

// x_j = 1 iff the positive path (or its s-t edge) lies in the first tree.
std::vector<bool> pull_trees_to_assignment(const NaeToTreesResult& r,
                                           const Bipartition& trees);

Bipartition lift_assignment_to_trees(const NaeToTreesResult& r,
                                     const std::vector<bool>& values);

// --- Perfect even factor -> 2-factor with cycle lengths divisible by 4 ----
//
// Vertex v becomes the path v' - w1 - w2 - w3 - w4 - v''. Left side index
// 3v + {0, 1, 2} holds {v', w2, w4}; right side 3v + {0, 1, 2} holds
// {w1, w3, v''}. Arc uv becomes the edge u'v''.
struct EvenFactorToTwoFactorResult {
  Digraph source;
  BipartiteGraph graph;
  std::vector<std::array<std::size_t, 5>> path_edges;  // per vertex
  std::vector<std::size_t> arc_edge;                   // per arc
  std::vector<std::string> provenance;                 // per edge
};

EvenFactorToTwoFactorResult reduce_even_factor_to_two_factor(const Digraph& d);

// Arc set -> its edges plus every vertex path.
std::vector<std::size_t> lift_even_factor(const EvenFactorToTwoFactorResult& r,
                                          const std::vector<std::size_t>& arcs);

// 2-factor -> the arcs whose edges it uses.
std::vector<std::size_t> pull_two_factor(const EvenFactorToTwoFactorResult& r,
                                         const std::vector<std::size_t>& edges);

// --- 2-factor -> parity bases of a transversal matroid --------------------
//
// Each left vertex s is doubled into s' = 2s and s'' = 2s + 1, both adjacent
// to the neighbours of s. The pairs {s', s''} are the modules.
struct TwoFactorToParityResult {
  BipartiteGraph source;
  // nullopt when the sides differ in size: no 2-factor exists.
  std::optional<ParityInstance> instance;
  BipartiteGraph doubled;
  std::vector<std::string> provenance;  // per output element
};

TwoFactorToParityResult reduce_two_factor_to_parity(const BipartiteGraph& g);

// Splits every cycle's left vertices alternately between the classes.
Bipartition lift_two_factor_to_parity(const TwoFactorToParityResult& r,
                                      const std::vector<std::size_t>& edges);

// Matches each class onto the right side and unions the two matchings.
std::vector<std::size_t> pull_parity_to_two_factor(
    const TwoFactorToParityResult& r, const Bipartition& cert);

// --- Common bases -> common bases with one partition matroid --------------
//
// For k = 2 the output pairs the direct sum of the first matroid and one
// parallel copy of the second matroid's dual with the partition matroid
// that takes exactly one of {e, e#1} for every e.
struct PartitionNormalFormResult {
  CommonBasesInstance source;
  CommonBasesInstance instance;
  std::vector<std::string> provenance;
};

// Throws PreconditionError unless k = 2 and |S| = 2 r1(S) = 2 r2(S).
PartitionNormalFormResult reduce_to_partition_matroid_case(
    const CommonBasesInstance& inst);

CommonBasesCertificate pull_partition_normal_form(
    const PartitionNormalFormResult& r, const CommonBasesCertificate& cert);

CommonBasesCertificate lift_partition_normal_form(
    const PartitionNormalFormResult& r, const CommonBasesCertificate& cert);

}  // namespace matkit

#endif  // MATKIT_REDUCTIONS_HPP_
