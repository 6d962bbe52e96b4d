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
#include "roundtrip.hpp"

#include <algorithm>
#include <sstream>

#include "brute.hpp"
#include "matkit/certificates.hpp"
#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"
#include "matkit/reductions.hpp"
#include "matkit/solvers.hpp"

namespace matkit::testing {

void RoundTripStats::merge(const RoundTripStats& o) {
  instances += o.instances;
  yes += o.yes;
  answer_mismatches += o.answer_mismatches;
  certificate_failures += o.certificate_failures;
  size_law_failures += o.size_law_failures;
  if (first_problem.empty()) first_problem = o.first_problem;
}

std::string RoundTripStats::summary() const {
  std::ostringstream out;
  out << instances << " instances (" << yes << " YES), " << answer_mismatches
      << " answer mismatches, " << certificate_failures << " certificate failures, "
      << size_law_failures << " size-law failures";
  if (!first_problem.empty()) out << "; first: " << first_problem;
  return out.str();
}

namespace {

struct Recorder {
  RoundTripStats stats;
  std::string name;

  void note(std::size_t RoundTripStats::*counter, const std::string& what) {
    ++(stats.*counter);
    if (stats.first_problem.empty()) stats.first_problem = name + ": " + what;
  }
  void law(bool ok, const std::string& what) {
    if (!ok) note(&RoundTripStats::size_law_failures, what);
  }
  void answers(bool source, bool output) {
    if (source != output) {
      note(&RoundTripStats::answer_mismatches,
           std::string("source ") + (source ? "YES" : "NO") + " but output " +
               (output ? "YES" : "NO"));
    }
  }
  void cert(const Verdict& v, const std::string& what) {
    if (!v) note(&RoundTripStats::certificate_failures, what + ": " + v.reason);
  }
  // Runs a map, counting any exception as a certificate failure.
  template <typename F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      note(&RoundTripStats::certificate_failures, what + " threw: " + e.what());
    }
  }
};

std::string describe_edges(const brute::EdgeList& edges) {
  std::string out;
  for (const auto& [a, b] : edges) out += std::to_string(a) + "-" + std::to_string(b) + " ";
  return out;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<CnfFormula> all_normalized_formulas(std::size_t max_vars,
                                                std::size_t max_clauses) {
  std::vector<CnfFormula> out;
  for (std::size_t n = 0; n <= max_vars; ++n) {
    std::vector<std::vector<Literal>> kinds;
    for (brute::Mask vars = 0; vars < (brute::Mask{1} << n); ++vars) {
      const std::size_t width = brute::popcount(vars);
      if (width < 2) continue;
      for (brute::Mask signs = 0; signs < (brute::Mask{1} << width); ++signs) {
        std::vector<Literal> clause;
        for (std::size_t v = 0, k = 0; v < n; ++v) {
          if (brute::has(vars, v)) clause.push_back({v, brute::has(signs, k++)});
        }
        kinds.push_back(clause);
      }
    }
    // Multisets of clause kinds via nondecreasing index sequences.
    std::vector<std::size_t> pick;
    auto emit = [&](auto&& self, std::size_t from) -> void {
      CnfFormula f;
      f.variables = n;
      for (std::size_t i : pick) f.clauses.push_back(kinds[i]);
      out.push_back(f);
      if (pick.size() == max_clauses) return;
      for (std::size_t i = from; i < kinds.size(); ++i) {
        pick.push_back(i);
        self(self, i);
        pick.pop_back();
      }
    };
    emit(emit, 0);
  }
  return out;
}

std::vector<brute::EdgeList> all_arc_sets(std::size_t vertices) {
  brute::EdgeList candidates;
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = 0; v < vertices; ++v) {
      if (u != v) candidates.emplace_back(u, v);
    }
  }
  std::vector<brute::EdgeList> out;
  for (brute::Mask m = 0; m < (brute::Mask{1} << candidates.size()); ++m) {
    brute::EdgeList arcs;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (brute::has(m, i)) arcs.push_back(candidates[i]);
    }
    out.push_back(arcs);
  }
  return out;
}

std::vector<brute::EdgeList> all_bipartite_edge_sets(std::size_t side) {
  std::vector<brute::EdgeList> out;
  const std::size_t cells = side * side;
  for (brute::Mask m = 0; m < (brute::Mask{1} << cells); ++m) {
    brute::EdgeList edges;
    for (std::size_t i = 0; i < cells; ++i) {
      if (brute::has(m, i)) edges.emplace_back(i / side, i % side);
    }
    out.push_back(edges);
  }
  return out;
}

Matroid random_balanced_matroid(Rng& rng, std::size_t n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matroid m = random_matroid(rng, n);
    if (2 * rank(m) == n) return m;
  }
  return uniform_matroid(GroundSet(n), n / 2);
}

RoundTripStats roundtrip_modular_to_common(const ModularInstance& inst) {
  Recorder rec{{}, "modular-to-common"};
  rec.stats.instances = 1;
  const std::size_t n = inst.matroid.size();
  const ModularToCommonResult r = reduce_modular_to_common(inst);
  rec.law(r.instance.first.size() == 10 * n, "output ground is not 10|S|");
  rec.law(rank(r.instance.first) == 5 * n && rank(r.instance.second) == 5 * n,
          "output ranks are not half the ground set");

  const bool source = brute::modular_bases_exist(inst.matroid, inst.modules.as_lists());
  const auto output = solve_modular_to_common_output(r);
  rec.answers(source, output.has_value());
  rec.stats.yes += source;
  if (source) {
    rec.guarded("lift", [&] {
      const auto witness = solve_modular_bases(inst);
      if (!witness) throw Error("source solver missed a split");
      const auto lifted = lift_modular_to_common(r, *witness);
      rec.cert(verify_common_bases(r.instance, lifted), "lifted split");
      rec.cert(verify_modular_bases(inst, pull_common_to_modular(r, lifted)),
               "pull of lifted split");
    });
  }
  if (output) {
    rec.guarded("pull", [&] {
      rec.cert(verify_modular_bases(inst, pull_common_to_modular(r, *output)),
               "pulled split");
    });
  }
  return rec.stats;
}

RoundTripStats roundtrip_naesat_to_trees(const CnfFormula& formula) {
  Recorder rec{{}, "naesat-to-trees " + to_string(formula)};
  rec.stats.instances = 1;
  const NaeToTreesResult r = reduce_naesat_to_modular_trees(formula);
  std::size_t literals = 0;
  for (const auto& c : r.formula.clauses) literals += c.size();
  const std::size_t vars = r.formula.variables;
  const std::size_t e = r.graph.edge_count(), v = r.graph.vertex_count();
  rec.law(e == 2 * vars + 4 * literals, "|E| != 2|U| + 4 sum|C|");
  rec.law(v == vars + 2 * literals + 1, "|V| != |U| + 2 sum|C| + 1");
  rec.law(e + 2 == 2 * v, "|E| != 2|V| - 2");
  rec.law(r.provenance.size() == e, "provenance does not cover every edge");

  const bool source = brute::nae_satisfiable(r.formula);
  const auto trees = solve_modular_trees(r.graph, r.modules);
  rec.answers(source, trees.has_value());
  rec.stats.yes += source;
  if (source) {
    rec.guarded("lift", [&] {
      const auto a = solve_naesat(r.formula);
      if (!a) throw Error("source solver missed an assignment");
      const Bipartition lifted = lift_assignment_to_trees(r, *a);
      rec.cert(verify_modular_trees(r.graph, r.modules, lifted), "lifted trees");
      const auto back = pull_trees_to_assignment(r, lifted);
      rec.cert(verify_nae_assignment(r.formula, back), "pull of lifted trees");
    });
  }
  if (trees) {
    rec.guarded("pull", [&] {
      rec.cert(verify_nae_assignment(r.formula, pull_trees_to_assignment(r, *trees)),
               "pulled assignment");
    });
  }
  return rec.stats;
}

RoundTripStats roundtrip_even_factor(std::size_t vertices, const brute::EdgeList& arcs) {
  Recorder rec{{}, "even-factor " + std::to_string(vertices) + ": " + describe_edges(arcs)};
  rec.stats.instances = 1;
  const Digraph d = make_digraph(vertices, arcs);
  const EvenFactorToTwoFactorResult r = reduce_even_factor_to_two_factor(d);
  rec.law(r.graph.left_size() == r.graph.right_size(), "sides differ");
  rec.law(r.graph.left_size() == 3 * vertices, "side is not 3|V|");

  auto cycle_law = [&](const std::vector<std::size_t>& source_arcs,
                       const std::vector<std::size_t>& edges) {
    std::vector<std::size_t> expected;
    for (std::size_t len : cycle_cover_lengths(d, source_arcs)) expected.push_back(6 * len);
    const auto lifted = sorted(two_factor_cycle_lengths(r.graph, edges));
    rec.law(sorted(expected) == lifted, "lifted cycles are not six times longer");
    for (std::size_t len : lifted) rec.law(len % 4 == 0, "lifted cycle length not 0 mod 4");
  };

  const bool source = brute::perfect_even_factor_exists(vertices, arcs);
  const auto output = solve_c4k2_two_factor(r.graph);
  rec.answers(source, output.has_value());
  rec.stats.yes += source;
  if (source) {
    rec.guarded("lift", [&] {
      const auto f = solve_perfect_even_factor(d);
      if (!f) throw Error("source solver missed a factor");
      const auto lifted = lift_even_factor(r, *f);
      rec.cert(verify_c4k2_two_factor(r.graph, lifted), "lifted factor");
      cycle_law(*f, lifted);
      const auto back = pull_two_factor(r, lifted);
      rec.cert(verify_perfect_even_factor(d, back), "pull of lifted factor");
      if (sorted(back) != sorted(*f)) {
        rec.note(&RoundTripStats::certificate_failures, "pull of lift changed the arcs");
      }
    });
  }
  if (output) {
    rec.guarded("pull", [&] {
      const auto back = pull_two_factor(r, *output);
      rec.cert(verify_perfect_even_factor(d, back), "pulled factor");
      cycle_law(back, *output);
    });
  }
  return rec.stats;
}

RoundTripStats roundtrip_two_factor(std::size_t side, const brute::EdgeList& edges) {
  Recorder rec{{}, "two-factor " + std::to_string(side) + ": " + describe_edges(edges)};
  rec.stats.instances = 1;
  const BipartiteGraph g = make_bipartite(side, side, edges);
  const TwoFactorToParityResult r = reduce_two_factor_to_parity(g);
  if (!r.instance) {
    rec.note(&RoundTripStats::size_law_failures, "balanced graph gave no instance");
    return rec.stats;
  }
  const ParityInstance& out = *r.instance;
  rec.law(out.matroid.size() == 2 * side, "ground is not twice the side");

  const bool source = brute::c4k2_two_factor_exists(side, edges);
  const std::size_t out_rank = rank(out.matroid);
  if (source) rec.law(2 * out_rank == out.matroid.size(), "ground != 2 rank on a YES");
  const bool output = brute::modular_bases_exist(out.matroid, out.pairs.as_lists(), out_rank);
  const auto solved = solve_parity_bases(out);
  rec.answers(source, output);
  rec.answers(output, solved.has_value());
  rec.stats.yes += source;
  if (source) {
    rec.guarded("lift", [&] {
      const auto f = solve_c4k2_two_factor(g);
      if (!f) throw Error("source solver missed a factor");
      const Bipartition lifted = lift_two_factor_to_parity(r, *f);
      rec.cert(verify_parity_bases(out, lifted), "lifted split");
      rec.cert(verify_c4k2_two_factor(g, pull_parity_to_two_factor(r, lifted)),
               "pull of lifted split");
    });
  }
  if (solved) {
    rec.guarded("pull", [&] {
      rec.cert(verify_c4k2_two_factor(g, pull_parity_to_two_factor(r, *solved)),
               "pulled factor");
    });
  }
  return rec.stats;
}

RoundTripStats roundtrip_partition_normal_form(const CommonBasesInstance& inst) {
  Recorder rec{{}, "partition-normal-form"};
  rec.stats.instances = 1;
  const std::size_t n = inst.first.size();
  const PartitionNormalFormResult r = reduce_to_partition_matroid_case(inst);
  rec.law(r.instance.first.size() == 2 * n, "output ground is not 2|S|");
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t e = 0; e < n; ++e) blocks.push_back({e, n + e});
  const Matroid rebuilt =
      partition_matroid(PartitionOfGroundSet(2 * n, blocks), std::vector<std::size_t>(n, 1));
  for (brute::Mask x = 0; x < (brute::Mask{1} << (2 * n)); ++x) {
    const ElementSet s = brute::to_set(2 * n, x);
    if (rebuilt.is_independent(s) != r.instance.second.is_independent(s)) {
      rec.note(&RoundTripStats::size_law_failures, "second matroid is not the pair partition");
      break;
    }
  }

  const bool source = brute::common_bases_exist(inst.first, inst.second, 2);
  const bool output = brute::common_bases_exist(r.instance.first, r.instance.second, 2);
  const auto solved = solve_common_bases(r.instance);
  rec.answers(source, output);
  rec.answers(output, solved.has_value());
  rec.stats.yes += source;
  if (source) {
    rec.guarded("lift", [&] {
      const auto c = solve_common_bases(inst);
      if (!c) throw Error("source solver missed a split");
      const auto lifted = lift_partition_normal_form(r, *c);
      rec.cert(verify_common_bases(r.instance, lifted), "lifted split");
      rec.cert(verify_common_bases(inst, pull_partition_normal_form(r, lifted)),
               "pull of lifted split");
    });
  }
  if (solved) {
    rec.guarded("pull", [&] {
      rec.cert(verify_common_bases(inst, pull_partition_normal_form(r, *solved)),
               "pulled split");
    });
  }
  return rec.stats;
}

}  // namespace matkit::testing
