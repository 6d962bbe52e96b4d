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
#ifndef MATKIT_GADGET_HPP_
#define MATKIT_GADGET_HPP_

// A pair of graphic matroids on 9 l elements, built from l blocks
// {a_j, ..., i_j}, such that every split of the ground set into two sets
// independent in both matroids has class sizes exactly 5 l and 4 l.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "matkit/element_set.hpp"
#include "matkit/graphs.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

inline constexpr std::size_t kBlockSize = 9;
inline constexpr std::size_t kBlockVertices = 6;

// Position of each label inside a block; block j occupies ground indices
// 9j .. 9j+8 in this order.
enum BlockLabel : std::size_t {
  kLabelA = 0, kLabelB, kLabelC, kLabelD, kLabelE,
  kLabelF, kLabelG, kLabelH, kLabelI
};

char block_label_letter(std::size_t label);

struct TemplateEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  bool operator==(const TemplateEdge&) const = default;
};

// Per-block edge templates on local vertices 0..5, indexed by label.
// In the first graph a..f span a K4 on 0..3 and i is parallel to h.
// In the second graph a, b, c, d, g, h span a K4 and the i edge of block j
// is drawn inside block j+1 (cyclically), parallel to that block's f.
struct GadgetBlockLabeling {
  std::array<TemplateEdge, kBlockSize> first;
  std::array<TemplateEdge, kBlockSize> second;
  bool operator==(const GadgetBlockLabeling&) const = default;
};

struct GadgetPair {
  std::size_t ell;
  GadgetBlockLabeling labeling;
  MultiGraph first_graph;
  MultiGraph second_graph;
  Matroid first;
  Matroid second;
};

GadgetPair build_gadget(const GadgetBlockLabeling& labeling, std::size_t ell);

// Ground index of a label inside block (0-based).
inline std::size_t gadget_element(std::size_t block, std::size_t label) {
  return block * kBlockSize + label;
}

// The split {d,e,f,g,h}_j / {a,b,c,i}_j of all blocks, larger class first.
std::pair<ElementSet, ElementSet> standard_gadget_split(std::size_t ell);

struct GadgetCertificate {
  std::size_t ell = 0;
  std::uint64_t bipartitions_checked = 0;
  std::uint64_t feasible_bipartitions = 0;
  // A split into two common independent sets of sizes 5l and 4l exists.
  bool condition_a = false;
  // Every split into two common independent sets has those sizes.
  bool condition_b = false;
  std::optional<std::pair<ElementSet, ElementSet>> witness;  // larger first
  std::optional<std::pair<ElementSet, ElementSet>> counterexample;
  // Structural filters over all feasible splits: each block minus i splits
  // 5/3 with e, f, g, h on one side; every i sits opposite its block's e, f,
  // g, h, and all blocks agree on that side.
  bool efgh_together = true;
  bool i_opposite_efgh = true;
  bool passed() const { return condition_a && condition_b; }
};

// Exhaustive sweep over all 2^(9l-1) splits with a_1 fixed in the first
// class. threads = 0 uses the hardware concurrency. Throws
// ResourceLimitError when 9l exceeds cap.
GadgetCertificate verify_gadget(const GadgetPair& pair, std::size_t threads = 0,
                                std::size_t cap = 27);

// Sizes x such that some split into two common independent sets has a class
// of size x. Computed blockwise, so any l is cheap. result[x] for x <= 9l.
std::vector<bool> achievable_class_sizes(const GadgetBlockLabeling& labeling,
                                         std::size_t ell);

struct GadgetSearchStats {
  std::size_t first_graph_classes = 0;
  std::size_t second_graph_classes = 0;
  std::size_t candidates_tried = 0;
};

// Enumerates K4 labelings of both graphs up to vertex symmetry, with the
// remaining edges attached as bridges, in lexicographic order. Returns the
// first labeling for which the standard split is feasible and verify_gadget
// passes (with both structural filters) at l = 1 and l = 2. Throws Error if
// none exists.
GadgetBlockLabeling search_block_labeling(GadgetSearchStats* stats = nullptr,
                                          std::size_t threads = 0);

// search_block_labeling() computed once per process.
const GadgetBlockLabeling& certified_labeling();

nlohmann::json labeling_to_json(const GadgetBlockLabeling& labeling);
GadgetBlockLabeling labeling_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const GadgetCertificate& cert,
                                   const GadgetPair& pair);
std::string gadget_to_dot(const GadgetPair& pair);

}  // namespace matkit

#endif  // MATKIT_GADGET_HPP_
