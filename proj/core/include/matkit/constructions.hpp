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
#ifndef MATKIT_CONSTRUCTIONS_HPP_
#define MATKIT_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matkit/element_set.hpp"
#include "matkit/field.hpp"
#include "matkit/graphs.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

// Disjoint non-empty blocks covering {0, ..., universe-1}.
class PartitionOfGroundSet {
 public:
  PartitionOfGroundSet() = default;
  // Throws PreconditionError unless the blocks partition the universe.
  PartitionOfGroundSet(std::size_t universe,
                       const std::vector<std::vector<std::size_t>>& blocks);

  // Consecutive pairs {0,1}, {2,3}, ...; universe must be even.
  static PartitionOfGroundSet consecutive_pairs(std::size_t universe);
  static PartitionOfGroundSet singletons(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const ElementSet& block(std::size_t i) const { return blocks_.at(i); }
  std::size_t block_of(std::size_t e) const { return block_of_.at(e); }
  std::vector<std::vector<std::size_t>> as_lists() const;

  // Union of the blocks i with chosen[i] set.
  ElementSet union_of(const std::vector<bool>& chosen) const;
  // True iff x is a union of blocks.
  bool is_modular(const ElementSet& x) const;
  bool all_blocks_have_size(std::size_t size) const;

  bool operator==(const PartitionOfGroundSet& o) const {
    return universe_ == o.universe_ && blocks_ == o.blocks_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<ElementSet> blocks_;
  std::vector<std::size_t> block_of_;
};

// Family H of proper subsets, each of size >= r, pairwise intersecting in at
// most r - 2 elements, with r >= 2. Avoiding every member defines the bases
// of a paving matroid of rank r.
struct HyperplaneFamily {
  GroundSet universe;
  std::size_t r = 2;
  std::vector<ElementSet> sets;

  // Throws PreconditionError naming the offending set or pair.
  void validate() const;
};

Matroid free_matroid(const GroundSet& ground);
Matroid uniform_matroid(const GroundSet& ground, std::size_t r);
// X independent iff |X cap block_i| <= caps[i] for every block.
Matroid partition_matroid(const PartitionOfGroundSet& partition,
                          const std::vector<std::size_t>& caps);
// Edge sets that are forests. Self-loops are dependent singletons and
// parallel edges form 2-element circuits.
Matroid graphic_matroid(const MultiGraph& graph);
// Subsets of the left side covered by a matching.
Matroid transversal_matroid(const BipartiteGraph& graph);
Matroid paving_matroid(const HyperplaneFamily& family);
// Column matroid. Labels default to column indices.
Matroid linear_matroid(const MatrixOverField& matrix);
Matroid linear_matroid(const MatrixOverField& matrix, const GroundSet& ground);
// Candidate matroid from an explicit list of independent sets. Not checked
// against the axioms; used to feed the axiom checker and for fixtures.
Matroid set_family_matroid(const GroundSet& ground,
                           const std::vector<ElementSet>& independent_sets);

// Ground sets are concatenated in order: element e of part i maps to
// offset_i + e.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);
Matroid direct_sum(const std::vector<Matroid>& parts);
Matroid truncate(const Matroid& m, std::size_t k);
// X independent in the dual iff S - X spans m.
Matroid dual(const Matroid& m);
// Copy j (0-based) of element e is element j * |S| + e, labeled "e#<j+1>".
Matroid parallel_copies(const Matroid& m, std::size_t k);

// |T| x |S| matrix over GF(p) with a uniform nonzero entry at (t, s) for
// each edge st and zero elsewhere. With probability at least
// 1 - |S| 2^|S| / p its column matroid is the transversal matroid of g.
// Requires p prime, 10^6 <= p < 2^31.
// Reorders the ground set: element i of the result is element order[i] of m.
Matroid permute_ground(const Matroid& m, const std::vector<std::size_t>& order);

MatrixOverField transversal_linear_representation(const BipartiteGraph& g,
                                                  std::uint32_t p,
                                                  std::uint64_t seed);

inline constexpr std::uint32_t kMinRepresentationPrime = 1'000'000;

}  // namespace matkit

#endif  // MATKIT_CONSTRUCTIONS_HPP_
