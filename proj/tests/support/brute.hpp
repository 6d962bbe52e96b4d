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
#ifndef MATKIT_TESTS_SUPPORT_BRUTE_HPP_
#define MATKIT_TESTS_SUPPORT_BRUTE_HPP_

// Brute-force reference answers for the tests. Everything here works from
// raw edge lists, matrices or plain independence queries and shares no
// search code with the library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matkit/instances.hpp"
#include "matkit/matroid.hpp"

namespace matkit::brute {

using Mask = std::uint64_t;
using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }
std::size_t popcount(Mask m);

ElementSet to_set(std::size_t n, Mask m);
Mask to_mask(const ElementSet& s);

// Forest test by repeated leaf stripping.
bool is_forest(std::size_t vertices, const EdgeList& edges, Mask chosen);

// Left vertices in `chosen` can be matched injectively (plain backtracking).
bool left_matchable(std::size_t right, const EdgeList& edges, Mask chosen);

// Column independence over GF(p) for tiny p by trying every coefficient
// vector. Entries are reduced mod p.
bool columns_independent_mod_p(const std::vector<std::vector<std::uint64_t>>& rows,
                               Mask columns, std::uint64_t p);

// Rank as the largest independent subset, by subset enumeration.
std::size_t rank_of(const Matroid& m, Mask x);
std::size_t rank_of(const Matroid& m);
bool is_basis(const Matroid& m, Mask x, std::size_t full_rank);

// I1 to I3 over a full independence table (n <= 12).
bool satisfies_axioms(const Matroid& m);

std::size_t max_common_independent_size(const Matroid& m1, const Matroid& m2);

// Some assignment of every element to one of k classes makes every class
// independent.
bool partitionable(const Matroid& m, std::size_t k);

// Every assignment of elements to k classes, each class a common basis.
bool common_bases_exist(const Matroid& m1, const Matroid& m2, std::size_t k);

// Every subset of modules.
bool modular_bases_exist(const Matroid& m,
                         const std::vector<std::vector<std::size_t>>& modules);
// Same with the rank supplied, for ground sets too large for rank_of.
bool modular_bases_exist(const Matroid& m,
                         const std::vector<std::vector<std::size_t>>& modules,
                         std::size_t full_rank);

// Every one of the 2^n assignments.
bool nae_satisfiable(const CnfFormula& f);

// Every vertex permutation restricted to arcs, accepting when all cycles
// are even.
bool perfect_even_factor_exists(std::size_t vertices, const EdgeList& arcs);

// Unions of two edge-disjoint perfect matchings, accepting when every cycle
// length is a multiple of four.
bool c4k2_two_factor_exists(std::size_t side, const EdgeList& edges);

// Spanning-tree pair made of whole modules, over all module subsets.
bool modular_trees_exist(std::size_t vertices, const EdgeList& edges,
                         const std::vector<std::vector<std::size_t>>& modules);

}  // namespace matkit::brute

#endif  // MATKIT_TESTS_SUPPORT_BRUTE_HPP_
