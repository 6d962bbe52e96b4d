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
#include "matkit/adversary.hpp"
#include "matkit/certificates.hpp"
#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"
#include "matkit/gadget.hpp"
#include "matkit/solvers.hpp"
#include "random_instances.hpp"

namespace matkit {
namespace {

SolveOptions with(SolveStrategy s) {
  SolveOptions o;
  o.strategy = s;
  o.threads = 2;
  return o;
}

std::vector<std::vector<std::size_t>> lists(const PartitionOfGroundSet& p) {
  return p.as_lists();
}

TEST(SolveCommonBasesTest, SmallExamples) {
  const Matroid u42 = uniform_matroid(GroundSet(4), 2);
  const CommonBasesInstance yes{u42, u42, 2};
  const auto cert = solve_common_bases(yes);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_common_bases(yes, *cert));
  // Nine elements cannot split into two bases of rank five.
  const GadgetPair g = build_gadget(certified_labeling(), 1);
  EXPECT_FALSE(solve_common_bases({g.first, g.second, 2}).has_value());
}

TEST(SolveCommonBasesTest, MatchesBruteForce) {
  testing::Rng rng(41);
  std::size_t yes = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t k = trial % 5 == 0 ? 3 : 2;
    const std::size_t n = k * testing::uniform_int(rng, 0, k == 2 ? 4 : 2);
    const CommonBasesInstance inst{testing::random_matroid(rng, n),
                                   testing::random_matroid(rng, n), k};
    const bool expected = brute::common_bases_exist(inst.first, inst.second, k);
    for (SolveStrategy s : {SolveStrategy::kAuto, SolveStrategy::kBacktrack}) {
      const auto cert = solve_common_bases(inst, with(s));
      ASSERT_EQ(cert.has_value(), expected);
      if (cert) ASSERT_TRUE(verify_common_bases(inst, *cert));
    }
    yes += expected;
  }
  EXPECT_GT(yes, 10u);
}

TEST(SolveCommonBasesTest, CapIsEnforced) {
  const Matroid big = uniform_matroid(GroundSet(30), 15);
  EXPECT_THROW(solve_common_bases({big, big, 2}), ResourceLimitError);
  SolveOptions tight;
  tight.cap = 3;
  const Matroid u42 = uniform_matroid(GroundSet(4), 2);
  EXPECT_THROW(solve_common_bases({u42, u42, 2}, tight), ResourceLimitError);
}

TEST(SolveModularBasesTest, SmallExamples) {
  const Matroid u42 = uniform_matroid(GroundSet(4), 2);
  const ModularInstance pairs{u42, PartitionOfGroundSet::consecutive_pairs(4)};
  const auto cert = solve_modular_bases(pairs);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_modular_bases(pairs, *cert));
  EXPECT_FALSE(solve_modular_bases({u42, PartitionOfGroundSet(4, {{0, 1, 2}, {3}})}));
}

TEST(SolveModularBasesTest, MatchesBruteForceForBothStrategies) {
  testing::Rng rng(42);
  std::size_t yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 * testing::uniform_int(rng, 1, 4);
    const ModularInstance inst{testing::random_matroid(rng, n),
                               PartitionOfGroundSet(n, testing::random_blocks(rng, n, 3))};
    const bool expected = brute::modular_bases_exist(inst.matroid, lists(inst.modules));
    for (SolveStrategy s : {SolveStrategy::kSweep, SolveStrategy::kBacktrack}) {
      const auto cert = solve_modular_bases(inst, with(s));
      ASSERT_EQ(cert.has_value(), expected);
      if (cert) ASSERT_TRUE(verify_modular_bases(inst, *cert));
    }
    yes += expected;
  }
  EXPECT_GT(yes, 10u);
}

TEST(SolveParityBasesTest, FreeMatroidHasNoSplit) {
  for (std::size_t pairs = 1; pairs <= 4; ++pairs) {
    const ParityInstance inst{free_matroid(GroundSet(2 * pairs)),
                              PartitionOfGroundSet::consecutive_pairs(2 * pairs)};
    EXPECT_FALSE(solve_parity_bases(inst).has_value());
  }
}

TEST(SolveParityBasesTest, AdversaryPairAtOnePair) {
  const AdversaryPair pair = build_adversary(1);
  EXPECT_FALSE(solve_parity_bases({pair.blocked, pair.pairing}).has_value());
  const auto cert = solve_parity_bases({pair.planted, pair.pairing});
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_parity_bases({pair.planted, pair.pairing}, *cert));
}

TEST(SolveModularTreesTest, DoubledGraphs) {
  MultiGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_TRUE(solve_modular_trees(path, PartitionOfGroundSet::singletons(4)));
  EXPECT_FALSE(solve_modular_trees(path, PartitionOfGroundSet(4, {{0, 2}, {1}, {3}})));

  // Six edges on three vertices: two spanning trees use only four.
  MultiGraph triangle(3);
  for (int copy = 0; copy < 2; ++copy) {
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(2, 0);
  }
  EXPECT_FALSE(solve_modular_trees(triangle, PartitionOfGroundSet::singletons(6)));
}

TEST(SolveModularTreesTest, AgreesWithGraphicModularBasesAndBruteForce) {
  testing::Rng rng(43);
  std::size_t yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t v = testing::uniform_int(rng, 2, 5);
    const std::size_t e = 2 * (v - 1);
    const auto edges = testing::random_edges(rng, v, e, false);
    const MultiGraph g = testing::make_multigraph(v, edges);
    const PartitionOfGroundSet modules(e, testing::random_blocks(rng, e, 2));
    const auto trees = solve_modular_trees(g, modules);
    const bool expected = brute::modular_trees_exist(v, edges, lists(modules));
    ASSERT_EQ(trees.has_value(), expected);
    ASSERT_EQ(solve_modular_bases({graphic_matroid(g), modules}).has_value(), expected);
    if (trees) ASSERT_TRUE(verify_modular_trees(g, modules, *trees));
    yes += expected;
  }
  EXPECT_GT(yes, 10u);
}

CnfFormula flipped(CnfFormula f) {
  for (auto& c : f.clauses) {
    for (auto& l : c) l.positive = !l.positive;
  }
  return f;
}

TEST(SolveNaeSatTest, SingleClauseAndEmptyFormula) {
  CnfFormula f;
  f.variables = 2;
  f.clauses = {{{0, true}, {1, true}}};
  const auto a = solve_naesat(f);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, (std::vector<bool>{true, false}));
  CnfFormula empty;
  empty.variables = 3;
  EXPECT_TRUE(solve_naesat(empty).has_value());
}

TEST(SolveNaeSatTest, MatchesBruteForceAndComplementSymmetry) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 400; ++trial) {
    const CnfFormula f = testing::random_formula(rng, testing::uniform_int(rng, 2, 6),
                                                 testing::uniform_int(rng, 0, 9));
    const auto a = solve_naesat(f);
    ASSERT_EQ(a.has_value(), brute::nae_satisfiable(f));
    ASSERT_EQ(solve_naesat(flipped(f)).has_value(), a.has_value());
    if (a) {
      ASSERT_TRUE(verify_nae_assignment(f, *a));
      ASSERT_TRUE((*a)[0]);  // the first variable is fixed to true
    }
  }
}

TEST(SolveNaeSatTest, CapIsEnforced) {
  CnfFormula f;
  f.variables = 40;
  EXPECT_THROW(solve_naesat(f), ResourceLimitError);
}

TEST(SolveEvenFactorTest, SmallCycles) {
  Digraph two(2);
  two.add_arc(0, 1);
  two.add_arc(1, 0);
  EXPECT_TRUE(solve_perfect_even_factor(two).has_value());
  Digraph three(3);
  three.add_arc(0, 1);
  three.add_arc(1, 2);
  three.add_arc(2, 0);
  EXPECT_FALSE(solve_perfect_even_factor(three).has_value());
}

TEST(SolveEvenFactorTest, MatchesPermutationEnumeration) {
  testing::Rng rng(45);
  std::size_t yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 1, 6);
    const auto arcs = testing::random_arcs(rng, n, 0.45);
    const Digraph d = testing::make_digraph(n, arcs);
    const auto f = solve_perfect_even_factor(d);
    ASSERT_EQ(f.has_value(), brute::perfect_even_factor_exists(n, arcs));
    if (f) ASSERT_TRUE(verify_perfect_even_factor(d, *f));
    yes += f.has_value();
  }
  EXPECT_GT(yes, 10u);
}

BipartiteGraph cycle(std::size_t half) {
  BipartiteGraph g(half, half);
  for (std::size_t i = 0; i < half; ++i) {
    g.add_edge(i, i);
    g.add_edge((i + 1) % half, i);
  }
  return g;
}

TEST(SolveTwoFactorTest, CyclesAndCompleteGraph) {
  EXPECT_TRUE(solve_c4k2_two_factor(cycle(4)).has_value());
  EXPECT_FALSE(solve_c4k2_two_factor(cycle(3)).has_value());
  BipartiteGraph k33(3, 3);
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t t = 0; t < 3; ++t) k33.add_edge(s, t);
  }
  EXPECT_FALSE(solve_c4k2_two_factor(k33).has_value());
}

TEST(SolveTwoFactorTest, MatchesMatchingPairEnumeration) {
  testing::Rng rng(46);
  std::size_t yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 1, 5);
    const auto edges = testing::random_bipartite_edges(rng, n, n, 0.6);
    const BipartiteGraph g = testing::make_bipartite(n, n, edges);
    const auto f = solve_c4k2_two_factor(g);
    ASSERT_EQ(f.has_value(), brute::c4k2_two_factor_exists(n, edges));
    if (f) ASSERT_TRUE(verify_c4k2_two_factor(g, *f));
    yes += f.has_value();
  }
  EXPECT_GT(yes, 10u);
}

}  // namespace
}  // namespace matkit
