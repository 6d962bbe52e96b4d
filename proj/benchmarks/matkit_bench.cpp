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
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "matkit/adversary.hpp"
#include "matkit/algorithms.hpp"
#include "matkit/constructions.hpp"
#include "matkit/gadget.hpp"
#include "matkit/reductions.hpp"
#include "matkit/solvers.hpp"

namespace {

using namespace matkit;

MultiGraph random_graph(std::size_t vertices, std::size_t edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  MultiGraph g(vertices);
  for (std::size_t i = 0; i < edges; ++i) g.add_edge(pick(rng), pick(rng));
  return g;
}

BipartiteGraph random_bipartite(std::size_t left, std::size_t right, double density,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  BipartiteGraph g(left, right);
  for (std::size_t s = 0; s < left; ++s) {
    for (std::size_t t = 0; t < right; ++t) {
      if (keep(rng)) g.add_edge(s, t);
    }
  }
  return g;
}

void BM_GraphicRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matroid m = graphic_matroid(random_graph(n / 2 + 1, n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GraphicRank)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_TransversalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matroid m = transversal_matroid(random_bipartite(n, n / 2, 0.1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_TransversalRank)->RangeMultiplier(4)->Range(16, 256);

void BM_MaxCommonIndependent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matroid m1 = graphic_matroid(random_graph(n / 2, n, 3));
  const Matroid m2 = transversal_matroid(random_bipartite(n, n / 2, 0.2, 4));
  for (auto _ : state) benchmark::DoNotOptimize(max_common_independent(m1, m2));
}
BENCHMARK(BM_MaxCommonIndependent)->RangeMultiplier(2)->Range(8, 64);

void BM_PartitionIntoForests(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matroid m = graphic_matroid(random_graph(n / 3 + 2, n, 5));
  for (auto _ : state) benchmark::DoNotOptimize(partition_into_independent(m, 3));
}
BENCHMARK(BM_PartitionIntoForests)->RangeMultiplier(2)->Range(8, 64);

void BM_TransversalRepresentation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BipartiteGraph g = random_bipartite(n, n, 0.3, 6);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transversal_linear_representation(g, 2147483647u, ++seed));
  }
}
BENCHMARK(BM_TransversalRepresentation)->RangeMultiplier(2)->Range(8, 64);

void BM_GadgetVerify(benchmark::State& state) {
  const GadgetPair pair =
      build_gadget(certified_labeling(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_gadget(pair, 1));
}
BENCHMARK(BM_GadgetVerify)->DenseRange(1, 2)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ReduceModularToCommon(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModularInstance inst{uniform_matroid(GroundSet(n), n / 2),
                             PartitionOfGroundSet::consecutive_pairs(n)};
  for (auto _ : state) benchmark::DoNotOptimize(reduce_modular_to_common(inst));
}
BENCHMARK(BM_ReduceModularToCommon)->DenseRange(2, 8, 2);

void BM_SolveReducedModular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModularToCommonResult r = reduce_modular_to_common(
      {uniform_matroid(GroundSet(n), n / 2), PartitionOfGroundSet::consecutive_pairs(n)});
  SolveOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_modular_to_common_output(r, options));
}
BENCHMARK(BM_SolveReducedModular)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_AdversaryExperiment(benchmark::State& state) {
  const AdversaryPair pair = build_adversary(static_cast<std::size_t>(state.range(0)));
  const QuerySolver solver = named_query_solver("backtrack");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_indistinguishability(pair, solver, AdversaryTarget::kBlocked));
  }
}
BENCHMARK(BM_AdversaryExperiment)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
