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
#include <gtest/gtest.h>

#include "brute.hpp"
#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"
#include "random_instances.hpp"

namespace matkit {
namespace {

using brute::Mask;

Mask all_of(std::size_t n) { return (Mask{1} << n) - 1; }

TEST(ConstructionsTest, GraphicMatchesLeafStripping) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t v = testing::uniform_int(rng, 1, 5);
    const std::size_t e = testing::uniform_int(rng, 0, 8);
    const auto edges = testing::random_edges(rng, v, e, true);
    const Matroid m = graphic_matroid(testing::make_multigraph(v, edges));
    for (Mask x = 0; x <= all_of(e); ++x) {
      ASSERT_EQ(m.is_independent(brute::to_set(e, x)), brute::is_forest(v, edges, x));
    }
  }
}

TEST(ConstructionsTest, TransversalMatchesBacktrackingMatcher) {
  testing::Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t left = testing::uniform_int(rng, 1, 7);
    const std::size_t right = testing::uniform_int(rng, 1, 5);
    const auto edges = testing::random_bipartite_edges(rng, left, right, 0.35);
    const Matroid m = transversal_matroid(testing::make_bipartite(left, right, edges));
    for (Mask x = 0; x <= all_of(left); ++x) {
      ASSERT_EQ(m.is_independent(brute::to_set(left, x)),
                brute::left_matchable(right, edges, x));
    }
  }
}

TEST(ConstructionsTest, PartitionCountsPerBlock) {
  const PartitionOfGroundSet blocks(5, {{0, 1, 2}, {3, 4}});
  const Matroid m = partition_matroid(blocks, {2, 1});
  for (Mask x = 0; x < 32; ++x) {
    const bool expected = brute::popcount(x & 7) <= 2 && brute::popcount(x & 24) <= 1;
    EXPECT_EQ(m.is_independent(brute::to_set(5, x)), expected);
  }
  EXPECT_THROW(partition_matroid(blocks, {4, 1}), DomainError);
  EXPECT_THROW(partition_matroid(blocks, {1}), DomainError);
}

TEST(ConstructionsTest, PartitionOfGroundSetValidates) {
  EXPECT_THROW(PartitionOfGroundSet(3, {{0, 1}}), PreconditionError);
  EXPECT_THROW(PartitionOfGroundSet(3, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(PartitionOfGroundSet(3, {{0, 1, 2}, {}}), PreconditionError);
  EXPECT_THROW(PartitionOfGroundSet(2, {{0, 2}}), PreconditionError);
  const PartitionOfGroundSet p(4, {{0, 3}, {1}, {2}});
  EXPECT_TRUE(p.is_modular(ElementSet(4, {0, 1, 3})));
  EXPECT_FALSE(p.is_modular(ElementSet(4, {0, 1})));
  EXPECT_EQ(p.block_of(3), 0u);
  EXPECT_EQ(p.union_of({false, true, true}).elements(), (std::vector<std::size_t>{1, 2}));
}

TEST(ConstructionsTest, PavingFollowsTheHyperplaneRule) {
  // r = 3 on 6 elements with two hyperplanes meeting in one element.
  HyperplaneFamily family{GroundSet(6), 3, {ElementSet(6, {0, 1, 2, 3}), ElementSet(6, {3, 4, 5})}};
  const Matroid m = paving_matroid(family);
  for (Mask x = 0; x < 64; ++x) {
    const std::size_t size = brute::popcount(x);
    bool expected = size < 3;
    if (size == 3) expected = (x & ~Mask{15}) != 0 && (x & ~Mask{56}) != 0;
    EXPECT_EQ(m.is_independent(brute::to_set(6, x)), expected) << x;
  }
  EXPECT_TRUE(brute::satisfies_axioms(m));
}

TEST(ConstructionsTest, HyperplaneFamilyRejectsBadInput) {
  EXPECT_THROW(paving_matroid({GroundSet(4), 2, {ElementSet(4, {0})}}), PreconditionError);
  EXPECT_THROW(paving_matroid({GroundSet(4), 2, {ElementSet(4, {0, 1, 2, 3})}}),
               PreconditionError);
  EXPECT_THROW(paving_matroid({GroundSet(5), 3,
                               {ElementSet(5, {0, 1, 2}), ElementSet(5, {0, 1, 3})}}),
               PreconditionError);
  EXPECT_THROW(paving_matroid({GroundSet(4), 1, {}}), PreconditionError);
}

TEST(ConstructionsTest, DualIsComplementOfSpanning) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 0, 8);
    const Matroid m = testing::random_matroid(rng, n);
    const Matroid d = dual(m);
    const std::size_t r = brute::rank_of(m);
    for (Mask x = 0; x <= all_of(n); ++x) {
      ASSERT_EQ(d.is_independent(brute::to_set(n, x)),
                brute::rank_of(m, all_of(n) & ~x) == r);
    }
  }
}

TEST(ConstructionsTest, DualInvolutionAndRankIdentity) {
  testing::Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 1, 10);
    const Matroid m = testing::random_matroid(rng, n);
    const Matroid dd = dual(dual(m));
    const Matroid d = dual(m);
    const std::size_t r = rank(m);
    for (Mask x = 0; x <= all_of(n); ++x) {
      const ElementSet s = brute::to_set(n, x);
      ASSERT_EQ(dd.is_independent(s), m.is_independent(s));
      ASSERT_EQ(rank(d, s) + r, s.count() + rank(m, s.complement()));
    }
  }
}

TEST(ConstructionsTest, TruncationCapsSize) {
  const Matroid m = truncate(free_matroid(GroundSet(5)), 2);
  for (Mask x = 0; x < 32; ++x) {
    EXPECT_EQ(m.is_independent(brute::to_set(5, x)), brute::popcount(x) <= 2);
  }
}

TEST(ConstructionsTest, DirectSumDecidesBlockwise) {
  const Matroid a = uniform_matroid(GroundSet(3), 1);
  const Matroid b = uniform_matroid(GroundSet(2), 2);
  const Matroid s = direct_sum(a, b);
  ASSERT_EQ(s.size(), 5u);
  for (Mask x = 0; x < 32; ++x) {
    EXPECT_EQ(s.is_independent(brute::to_set(5, x)), brute::popcount(x & 7) <= 1);
  }
  const Matroid labelled = direct_sum(a.with_labels({"x", "y", "z"}),
                                     b.with_labels({"x", "w"}));
  EXPECT_EQ(labelled.ground().label(3), "m1.x");
}

TEST(ConstructionsTest, ParallelCopiesForbidTwinsAndProject) {
  const Matroid base = uniform_matroid(GroundSet(3), 2);
  const Matroid p = parallel_copies(base, 2);
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(p.ground().label(4), "1#2");
  for (Mask x = 0; x < 64; ++x) {
    const Mask first = x & 7, second = x >> 3;
    const bool expected = (first & second) == 0 && brute::popcount(first | second) <= 2;
    EXPECT_EQ(p.is_independent(brute::to_set(6, x)), expected);
  }
  EXPECT_THROW(parallel_copies(base, 0), DomainError);
}

TEST(ConstructionsTest, PermuteGroundRelabels) {
  const Matroid m = partition_matroid(PartitionOfGroundSet(3, {{0, 1}, {2}}), {1, 0});
  const Matroid p = permute_ground(m.with_labels({"a", "b", "c"}), {2, 0, 1});
  EXPECT_EQ(p.ground().label(0), "c");
  EXPECT_FALSE(p.is_independent(ElementSet(3, {0})));
  EXPECT_TRUE(p.is_independent(ElementSet(3, {1})));
  EXPECT_FALSE(p.is_independent(ElementSet(3, {1, 2})));
  EXPECT_THROW(permute_ground(m, {0, 0, 1}), DomainError);
}

TEST(ConstructionsTest, RandomConstructionsSatisfyAxioms) {
  testing::Rng rng(25);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 0, 9);
    std::string kind;
    const Matroid m = testing::random_matroid(rng, n, &kind);
    ASSERT_TRUE(brute::satisfies_axioms(m)) << kind;
    ASSERT_TRUE(check_independence_axioms(m).all_passed()) << kind;
  }
}

TEST(ConstructionsTest, TransversalRepresentationAgreesForASeed) {
  testing::Rng rng(26);
  const auto edges = testing::random_bipartite_edges(rng, 7, 4, 0.4);
  const BipartiteGraph g = testing::make_bipartite(7, 4, edges);
  const Matroid linear = linear_matroid(transversal_linear_representation(g, 2147483647u, 3));
  for (Mask x = 0; x < 128; ++x) {
    EXPECT_EQ(linear.is_independent(brute::to_set(7, x)), brute::left_matchable(4, edges, x));
  }
  EXPECT_THROW(transversal_linear_representation(g, 101, 1), DomainError);
}

TEST(ConstructionsTest, UniformRejectsOversizedRank) {
  EXPECT_THROW(uniform_matroid(GroundSet(2), 3), DomainError);
}

}  // namespace
}  // namespace matkit
