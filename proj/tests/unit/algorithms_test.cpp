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
#include "matkit/algorithms.hpp"
#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"
#include "random_instances.hpp"

namespace matkit {
namespace {

TEST(AlgorithmsTest, CommonIndependentOfTwoPartitionMatroids) {
  // Rows and columns of a 2x2 grid: a perfect matching has size 2.
  const Matroid rows = partition_matroid(PartitionOfGroundSet(4, {{0, 1}, {2, 3}}), {1, 1});
  const Matroid cols = partition_matroid(PartitionOfGroundSet(4, {{0, 2}, {1, 3}}), {1, 1});
  const ElementSet x = max_common_independent(rows, cols);
  EXPECT_EQ(x.count(), 2u);
  EXPECT_TRUE(rows.is_independent(x));
  EXPECT_TRUE(cols.is_independent(x));
}

TEST(AlgorithmsTest, CommonIndependentMatchesBruteForce) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 0, 8);
    const Matroid m1 = testing::random_matroid(rng, n);
    const Matroid m2 = testing::random_matroid(rng, n);
    const ElementSet x = max_common_independent(m1, m2);
    ASSERT_TRUE(m1.is_independent(x));
    ASSERT_TRUE(m2.is_independent(x));
    ASSERT_EQ(x.count(), brute::max_common_independent_size(m1, m2));
  }
}

TEST(AlgorithmsTest, PartitionIntoIndependentMatchesBruteForce) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 0, 7);
    const std::size_t k = testing::uniform_int(rng, 1, 3);
    const Matroid m = testing::random_matroid(rng, n);
    const auto classes = partition_into_independent(m, k);
    ASSERT_EQ(classes.has_value(), brute::partitionable(m, k));
    if (!classes) continue;
    ASSERT_EQ(classes->size(), k);
    ElementSet covered(n);
    for (const auto& c : *classes) {
      ASSERT_TRUE(m.is_independent(c));
      ASSERT_FALSE(covered.intersects(c));
      covered |= c;
    }
    ASSERT_EQ(covered.count(), n);
  }
}

TEST(AlgorithmsTest, LoopsBlockPartitioning) {
  MultiGraph g(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  EXPECT_FALSE(partition_into_independent(graphic_matroid(g), 3).has_value());
}

TEST(AlgorithmsTest, NecessaryConditionHoldsWheneverCommonBasesExist) {
  testing::Rng rng(33);
  std::size_t yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 * testing::uniform_int(rng, 1, 4);
    const Matroid m1 = testing::random_matroid(rng, n);
    const Matroid m2 = testing::random_matroid(rng, n);
    if (!brute::common_bases_exist(m1, m2, 2)) continue;
    ++yes;
    EXPECT_TRUE(common_bases_necessary_check(m1, m2, 2).passed);
  }
  EXPECT_GT(yes, 0u);
}

TEST(AlgorithmsTest, NecessaryConditionReportsTheFailingPart) {
  const Matroid u42 = uniform_matroid(GroundSet(4), 2);
  EXPECT_TRUE(common_bases_necessary_check(u42, u42, 2).passed);
  const auto sizes = common_bases_necessary_check(u42, uniform_matroid(GroundSet(4), 3), 2);
  EXPECT_FALSE(sizes.size_condition);
  EXPECT_FALSE(sizes.passed);
  // Rank 2 but two elements are loops: no split into two independent sets.
  const Matroid loops = partition_matroid(PartitionOfGroundSet(4, {{0, 1}, {2}, {3}}), {2, 0, 0});
  const auto split = common_bases_necessary_check(loops, u42, 2);
  EXPECT_TRUE(split.size_condition);
  EXPECT_FALSE(split.m1_partitionable);
  EXPECT_TRUE(split.m2_partitionable);
  EXPECT_THROW(common_bases_necessary_check(u42, uniform_matroid(GroundSet(3), 1), 2),
               DomainError);
}

}  // namespace
}  // namespace matkit
