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

#include "matkit/certificates.hpp"
#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"
#include "matkit/instances.hpp"

namespace matkit {
namespace {

CnfFormula formula(std::size_t n, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.variables = n;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int v : c) lits.push_back({static_cast<std::size_t>(std::abs(v) - 1), v > 0});
    f.clauses.push_back(lits);
  }
  return f;
}

TEST(CnfFormulaTest, NormalizeDropsTautologiesAndDuplicates) {
  NormalizationReport report;
  const CnfFormula out = normalize(formula(3, {{1, -1, 2}, {2, 2, 3}, {1, -3}}), &report);
  EXPECT_EQ(out, formula(3, {{2, 3}, {1, -3}}));
  EXPECT_EQ(report.dropped_tautologies, 1u);
  EXPECT_EQ(report.removed_duplicate_literals, 1u);
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_NE(report.warnings[0].find("clause 1"), std::string::npos);
  EXPECT_TRUE(is_normalized(out));
  EXPECT_FALSE(is_normalized(formula(2, {{1, 1}})));
}

TEST(CnfFormulaTest, NormalizeRejectsUnitEmptyAndOutOfRange) {
  EXPECT_THROW(normalize(formula(2, {{1}})), DomainError);
  EXPECT_THROW(normalize(formula(2, {{2, 2}})), DomainError);
  EXPECT_THROW(normalize(formula(2, {{}})), DomainError);
  EXPECT_THROW(normalize(formula(2, {{1, 3}})), DomainError);
}

TEST(CnfFormulaTest, NotAllEqualSemantics) {
  const CnfFormula f = formula(3, {{1, 2, 3}});
  EXPECT_TRUE(nae_satisfies(f, {true, false, false}));
  EXPECT_FALSE(nae_satisfies(f, {true, true, true}));
  EXPECT_FALSE(nae_satisfies(f, {false, false, false}));
  EXPECT_FALSE(nae_satisfies(f, {true, false}));
  EXPECT_TRUE(nae_satisfies(formula(4, {}), {false, false, false, false}));
  EXPECT_EQ(to_string(formula(2, {{1, -2}})), "(x1 | ~x2)");
  EXPECT_EQ(to_string(formula(2, {})), "true");
}

TEST(InstancesTest, WellFormedChecks) {
  const Matroid u42 = uniform_matroid(GroundSet(4), 2);
  ModularInstance good{u42, PartitionOfGroundSet::consecutive_pairs(4)};
  EXPECT_NO_THROW(good.require_well_formed());
  EXPECT_TRUE(good.balanced());
  ModularInstance bad{u42, PartitionOfGroundSet::singletons(3)};
  EXPECT_THROW(bad.require_well_formed(), DomainError);
  ParityInstance odd{u42, PartitionOfGroundSet(4, {{0, 1, 2}, {3}})};
  EXPECT_THROW(odd.require_well_formed(), DomainError);
  CommonBasesInstance mismatched{u42, uniform_matroid(GroundSet(3), 1), 2};
  EXPECT_THROW(mismatched.require_well_formed(), DomainError);
  CommonBasesInstance zero{u42, u42, 0};
  EXPECT_THROW(zero.require_well_formed(), DomainError);
}

TEST(VerifierTest, CommonBases) {
  const Matroid u42 = uniform_matroid(GroundSet(4), 2);
  const CommonBasesInstance inst{u42, u42, 2};
  EXPECT_TRUE(verify_common_bases(inst, {{ElementSet(4, {0, 1}), ElementSet(4, {2, 3})}}));
  EXPECT_FALSE(verify_common_bases(inst, {{ElementSet(4, {0}), ElementSet(4, {1, 2, 3})}}));
  EXPECT_FALSE(verify_common_bases(inst, {{ElementSet(4, {0, 1}), ElementSet(4, {1, 2})}}));
  EXPECT_FALSE(verify_common_bases(inst, {{ElementSet(4, {0, 1})}}));
  EXPECT_FALSE(verify_common_bases(inst, {{ElementSet(4, {0, 1}), ElementSet(4, {2})}}));
}

TEST(VerifierTest, ModularBasesRejectSplitModules) {
  const ModularInstance inst{uniform_matroid(GroundSet(4), 2),
                             PartitionOfGroundSet::consecutive_pairs(4)};
  EXPECT_TRUE(verify_modular_bases(inst, {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})}));
  const Verdict split =
      verify_modular_bases(inst, {ElementSet(4, {0, 2}), ElementSet(4, {1, 3})});
  EXPECT_FALSE(split);
  EXPECT_NE(split.reason.find("split"), std::string::npos);
}

TEST(VerifierTest, ModularTreesNeedSpanningTrees) {
  // Doubled path 0 - 1 - 2: edges 0, 2 join 0-1 and edges 1, 3 join 1-2.
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const auto singles = PartitionOfGroundSet::singletons(4);
  EXPECT_TRUE(verify_modular_trees(g, singles, {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})}));
  EXPECT_FALSE(verify_modular_trees(g, singles, {ElementSet(4, {0, 2}), ElementSet(4, {1, 3})}));
  const PartitionOfGroundSet twins(4, {{0, 2}, {1}, {3}});
  const Verdict split =
      verify_modular_trees(g, twins, {ElementSet(4, {0, 1}), ElementSet(4, {2, 3})});
  EXPECT_FALSE(split);
  EXPECT_NE(split.reason.find("split"), std::string::npos);
}

TEST(VerifierTest, NaeAssignment) {
  const CnfFormula f = formula(2, {{1, 2}});
  EXPECT_TRUE(verify_nae_assignment(f, {true, false}));
  EXPECT_FALSE(verify_nae_assignment(f, {true, true}));
  EXPECT_FALSE(verify_nae_assignment(f, {true}));
}

TEST(VerifierTest, PerfectEvenFactor) {
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(2, 3);
  d.add_arc(3, 2);
  d.add_arc(1, 2);
  EXPECT_TRUE(verify_perfect_even_factor(d, {0, 1, 2, 3}));
  EXPECT_FALSE(verify_perfect_even_factor(d, {0, 1, 2}));
  EXPECT_EQ(cycle_cover_lengths(d, {0, 1, 2, 3}), (std::vector<std::size_t>{2, 2}));
  Digraph tri(3);
  tri.add_arc(0, 1);
  tri.add_arc(1, 2);
  tri.add_arc(2, 0);
  EXPECT_FALSE(verify_perfect_even_factor(tri, {0, 1, 2}));
  EXPECT_TRUE(verify_perfect_even_factor(Digraph(0), {}));
}

TEST(VerifierTest, TwoFactorCycleLengths) {
  // An 8-cycle s0 t0 s1 t1 s2 t2 s3 t3 s0.
  BipartiteGraph c8(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    c8.add_edge(i, i);
    c8.add_edge((i + 1) % 4, i);
  }
  EXPECT_TRUE(verify_c4k2_two_factor(c8, {0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_FALSE(verify_c4k2_two_factor(c8, {0, 1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(verify_c4k2_two_factor(c8, {0, 0, 1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(verify_c4k2_two_factor(c8, {0, 1, 2, 3, 4, 5, 6, 99}));
  BipartiteGraph c6(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    c6.add_edge(i, i);
    c6.add_edge((i + 1) % 3, i);
  }
  const Verdict six = verify_c4k2_two_factor(c6, {0, 1, 2, 3, 4, 5});
  EXPECT_FALSE(six);
  EXPECT_NE(six.reason.find("length 6"), std::string::npos);
}

}  // namespace
}  // namespace matkit
