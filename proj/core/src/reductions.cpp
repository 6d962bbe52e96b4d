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
#include "matkit/reductions.hpp"

#include <algorithm>
#include <map>

#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"

namespace matkit {

namespace {

void require_verified(const Verdict& v, const std::string& what) {
  if (!v) throw PreconditionError(what + " failed verification: " + v.reason);
}

// A map produced an invalid certificate from a valid one.
void require_sound(const Verdict& v, const std::string& what) {
  if (!v) throw Error(what + " produced an invalid certificate: " + v.reason);
}

ElementSet restrict_to_prefix(const ElementSet& x, std::size_t n) {
  ElementSet out(n);
  x.for_each([&](std::size_t e) {
    if (e < n) out.insert(e);
  });
  return out;
}

std::string variable_name(std::size_t j) { return "x" + std::to_string(j + 1); }

}  // namespace

// --- Modular bases -> common bases ----------------------------------------

ModularToCommonResult reduce_modular_to_common(
    const ModularInstance& inst, const GadgetBlockLabeling& labeling) {
  inst.require_well_formed();
  if (!inst.balanced()) {
    throw PreconditionError("modular instance needs |S| = 2 rank(S)");
  }
  const std::size_t n = inst.matroid.size();
  const PartitionOfGroundSet& modules = inst.modules;

  std::map<std::size_t, GadgetPair> gadgets;
  auto gadget = [&](std::size_t ell) -> const GadgetPair& {
    auto it = gadgets.find(ell);
    if (it == gadgets.end()) {
      it = gadgets.emplace(ell, build_gadget(labeling, ell)).first;
    }
    return it->second;
  };

  std::vector<Matroid> first_parts{inst.matroid};
  std::vector<Matroid> second_parts;
  std::vector<std::size_t> offsets;
  std::vector<std::string> labels, provenance;
  for (std::size_t e = 0; e < n; ++e) {
    labels.push_back(inst.matroid.ground().label(e));
    provenance.push_back("source element, module " +
                         std::to_string(modules.block_of(e)));
  }
  // order[new index] = index in the natural order of the second matroid,
  // which lists each module's elements followed by its gadget.
  std::vector<std::size_t> order(10 * n);
  std::size_t next = n, natural = 0;
  for (std::size_t p = 0; p < modules.block_count(); ++p) {
    const std::size_t size = modules.block(p).count();
    const GadgetPair& gp = gadget(size);
    offsets.push_back(next);
    first_parts.push_back(gp.first);
    second_parts.push_back(
        truncate(direct_sum(free_matroid(GroundSet(size)), gp.second), 5 * size));
    std::size_t local = 0;
    modules.block(p).for_each([&](std::size_t e) { order[e] = natural + local++; });
    for (std::size_t g = 0; g < kBlockSize * size; ++g) {
      order[next + g] = natural + size + g;
      const std::string name = gp.first.ground().label(g);
      labels.push_back("P" + std::to_string(p) + ":" + name);
      provenance.push_back("gadget of module " + std::to_string(p) +
                           ", element " + name);
    }
    natural += 10 * size;
    next += kBlockSize * size;
  }

  Matroid first = truncate(direct_sum(first_parts), 5 * n).with_labels(labels);
  Matroid second = second_parts.empty()
                       ? free_matroid(GroundSet(0))
                       : permute_ground(direct_sum(second_parts), order)
                             .with_labels(labels);
  return ModularToCommonResult{inst, CommonBasesInstance{first, second, 2},
                               labeling, std::move(offsets),
                               std::move(provenance)};
}

Bipartition pull_common_to_modular(const ModularToCommonResult& r,
                                   const CommonBasesCertificate& cert) {
  require_verified(verify_common_bases(r.instance, cert), "common bases split");
  const std::size_t n = r.source.matroid.size();
  Bipartition out{restrict_to_prefix(cert.classes[0], n),
                  restrict_to_prefix(cert.classes[1], n)};
  require_sound(verify_modular_bases(r.source, out), "pull to modular bases");
  return out;
}

namespace {

// Builds the output split from a source split and, per module, which
// gadget side goes with the first class.
CommonBasesCertificate assemble_common(const ModularToCommonResult& r,
                                       const ElementSet& source_first,
                                       const std::vector<bool>& big_to_first) {
  const std::size_t total = r.instance.first.size();
  const std::size_t n = r.source.matroid.size();
  ElementSet a(total), b(total);
  for (std::size_t e = 0; e < n; ++e) {
    (source_first.contains(e) ? a : b).insert(e);
  }
  for (std::size_t p = 0; p < r.source.modules.block_count(); ++p) {
    const auto [big, small] =
        standard_gadget_split(r.source.modules.block(p).count());
    const std::size_t off = r.gadget_offset[p];
    big.for_each([&](std::size_t g) { (big_to_first[p] ? a : b).insert(off + g); });
    small.for_each([&](std::size_t g) { (big_to_first[p] ? b : a).insert(off + g); });
  }
  return CommonBasesCertificate{{a, b}};
}

}  // namespace

CommonBasesCertificate lift_modular_to_common(const ModularToCommonResult& r,
                                              const Bipartition& cert) {
  require_verified(verify_modular_bases(r.source, cert), "modular bases split");
  std::vector<bool> big_to_first;
  for (const auto& block : r.source.modules.blocks()) {
    // The class holding P takes the smaller gadget side.
    big_to_first.push_back(!block.is_subset_of(cert.first));
  }
  CommonBasesCertificate out = assemble_common(r, cert.first, big_to_first);
  require_sound(verify_common_bases(r.instance, out), "lift to common bases");
  return out;
}

std::optional<CommonBasesCertificate> solve_modular_to_common_output(
    const ModularToCommonResult& r, const SolveOptions& options) {
  const Matroid& m = r.source.matroid;
  const PartitionOfGroundSet& modules = r.source.modules;
  const std::size_t n = m.size();
  const std::size_t cap = options.cap.value_or(kCommonBasesCap);
  if (n > cap || n > 63) {
    throw ResourceLimitError("source ground set is too large",
                             n, cap);
  }
  if (n == 0) return assemble_common(r, ElementSet(0), {});
  std::map<std::size_t, std::vector<bool>> profiles;
  for (const auto& block : modules.blocks()) {
    const std::size_t ell = block.count();
    if (!profiles.count(ell)) {
      profiles[ell] = achievable_class_sizes(r.labeling, ell);
    }
  }
  // The classes are interchangeable, so element 0 stays in the first.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const ElementSet x = ElementSet::from_mask(n, (mask << 1) | 1);
    std::vector<bool> big_to_first;
    bool sizes_ok = true;
    for (std::size_t p = 0; p < modules.block_count() && sizes_ok; ++p) {
      const std::size_t ell = modules.block(p).count();
      const std::size_t inside = (x & modules.block(p)).count();
      // The first class holds exactly 5|P| elements of P and its gadget.
      const std::size_t needed = 5 * ell - inside;
      sizes_ok = profiles[ell][needed];
      if (sizes_ok && needed != 4 * ell && needed != 5 * ell) {
        throw Error("gadget admits a class of size " + std::to_string(needed) +
                    " with no known split");
      }
      big_to_first.push_back(needed == 5 * ell);
    }
    if (!sizes_ok) continue;
    if (!m.is_independent(x) || !m.is_independent(x.complement())) continue;
    CommonBasesCertificate cert = assemble_common(r, x, big_to_first);
    require_sound(verify_common_bases(r.instance, cert), "module-aware solver");
    return cert;
  }
  return std::nullopt;
}

// --- NAE-SAT -> modular spanning trees ------------------------------------

NaeToTreesResult reduce_naesat_to_modular_trees(const CnfFormula& input) {
  NaeToTreesResult r;
  r.formula = normalize(input);
  const CnfFormula& f = r.formula;
  const std::size_t n = f.variables;

  // Occurrence index of each literal within its variable's positive or
  // negative list, in clause order.
  std::vector<std::size_t> p(n, 0), q(n, 0);
  std::vector<std::vector<std::size_t>> occurrence(f.clauses.size());
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    for (const Literal& lit : f.clauses[i]) {
      occurrence[i].push_back(lit.positive ? p[lit.var]++ : q[lit.var]++);
    }
  }

  MultiGraph g(1);
  std::vector<std::vector<std::string>> module_edges;  // labels per module
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<std::size_t>> w(n), z(n), uw(n), vz(n);
  std::size_t s = 0, t = 0;
  r.positive_st_edge.assign(n, NaeToTreesResult::npos);
  r.negative_st_edge.assign(n, NaeToTreesResult::npos);
  r.positive_module.assign(n, 0);
  r.negative_module.assign(n, 0);
  r.positive_pairs.assign(n, {});
  r.negative_pairs.assign(n, {});

  auto edge = [&](std::size_t a, std::size_t b, std::string label,
                  std::string role) {
    const std::size_t e = g.add_edge(a, b, std::move(label));
    r.provenance.push_back(std::move(role));
    return e;
  };

  for (std::size_t j = 0; j < n; ++j) {
    const std::string x = variable_name(j);
    std::vector<std::size_t> u(p[j]), v(q[j]);
    for (auto& vert : u) vert = g.add_vertex();
    for (std::size_t k = 0; k < p[j]; ++k) w[j].push_back(g.add_vertex());
    for (auto& vert : v) vert = g.add_vertex();
    for (std::size_t k = 0; k < q[j]; ++k) z[j].push_back(g.add_vertex());
    t = g.add_vertex();

    // Path s - u_1 - ... - u_p - t, or a single s-t edge when p = 0.
    auto path = [&](const std::vector<std::size_t>& inner, const char sign,
                    std::size_t& st_edge, std::size_t& module) {
      std::vector<std::size_t> block;
      const std::string prefix = x + sign;
      if (inner.empty()) {
        st_edge = edge(s, t, prefix + ":st",
                       "single s-t edge for empty " +
                           std::string(sign == '+' ? "positive" : "negative") +
                           " path of " + x);
        block.push_back(st_edge);
      } else {
        std::size_t prev = s;
        for (std::size_t k = 0; k <= inner.size(); ++k) {
          const std::size_t next = k < inner.size() ? inner[k] : t;
          block.push_back(edge(prev, next,
                               prefix + ":path" + std::to_string(k + 1),
                               std::string(sign == '+' ? "positive" : "negative") +
                                   " path of " + x));
          prev = next;
        }
      }
      module = blocks.size();
      blocks.push_back(block);
    };
    path(u, '+', r.positive_st_edge[j], r.positive_module[j]);
    path(v, '-', r.negative_st_edge[j], r.negative_module[j]);
    for (std::size_t k = 0; k < p[j]; ++k) {
      uw[j].push_back(edge(u[k], w[j][k], x + "+:u" + std::to_string(k + 1) + "w",
                           "pendant edge of occurrence " + std::to_string(k + 1) +
                               " of " + x));
    }
    for (std::size_t k = 0; k < q[j]; ++k) {
      vz[j].push_back(edge(v[k], z[j][k], x + "-:v" + std::to_string(k + 1) + "z",
                           "pendant edge of occurrence " + std::to_string(k + 1) +
                               " of ~" + x));
    }
    s = t;  // the next gadget starts where this one ends
  }

  r.clause_edges.resize(f.clauses.size());
  std::vector<std::size_t> clause_blocks;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& clause = f.clauses[i];
    const std::size_t len = clause.size();
    std::vector<std::size_t> y(len);
    for (std::size_t k = 0; k < len; ++k) {
      const Literal& lit = clause[k];
      y[k] = lit.positive ? w[lit.var][occurrence[i][k]]
                          : z[lit.var][occurrence[i][k]];
    }
    const std::string c = "C" + std::to_string(i + 1);
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t prev = (k + len - 1) % len;
      const std::size_t e =
          edge(y[prev], y[k],
               c + ":y" + std::to_string(prev + 1) + "y" + std::to_string(k + 1),
               "cycle edge of clause " + std::to_string(i + 1));
      r.clause_edges[i].push_back(e);
    }
  }

  // Closing edges from the final t to every w and z, paired into modules
  // with the matching pendant edge.
  std::vector<std::vector<std::size_t>> wt(n), zt(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < p[j]; ++k) {
      wt[j].push_back(edge(t, w[j][k],
                           variable_name(j) + "+:w" + std::to_string(k + 1) + "t",
                           "closing edge to occurrence " + std::to_string(k + 1) +
                               " of " + variable_name(j)));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < q[j]; ++k) {
      zt[j].push_back(edge(t, z[j][k],
                           variable_name(j) + "-:z" + std::to_string(k + 1) + "t",
                           "closing edge to occurrence " + std::to_string(k + 1) +
                               " of ~" + variable_name(j)));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < p[j]; ++k) {
      r.positive_pairs[j].push_back(blocks.size());
      blocks.push_back({uw[j][k], wt[j][k]});
    }
    for (std::size_t k = 0; k < q[j]; ++k) {
      r.negative_pairs[j].push_back(blocks.size());
      blocks.push_back({vz[j][k], zt[j][k]});
    }
  }
  for (const auto& edges : r.clause_edges) {
    for (std::size_t e : edges) blocks.push_back({e});
  }

  r.modules = PartitionOfGroundSet(g.edge_count(), blocks);
  r.graph = std::move(g);
  r.instance = ModularInstance{graphic_matroid(r.graph), r.modules};
  return r;
}

std::vector<bool> pull_trees_to_assignment(const NaeToTreesResult& r,
                                           const Bipartition& trees) {
  require_verified(verify_modular_trees(r.graph, r.modules, trees),
                   "modular tree pair");
  const std::size_t n = r.formula.variables;
  std::vector<bool> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = r.modules.block(r.positive_module[j]).is_subset_of(trees.first);
  }
  require_sound(verify_nae_assignment(r.formula, values), "pull to assignment");
  return values;
}

Bipartition lift_assignment_to_trees(const NaeToTreesResult& r,
                                     const std::vector<bool>& values) {
  require_verified(verify_nae_assignment(r.formula, values), "assignment");
  const std::size_t m = r.graph.edge_count();
  ElementSet t1(m);
  for (std::size_t j = 0; j < r.formula.variables; ++j) {
    if (values[j]) {
      t1 |= r.modules.block(r.positive_module[j]);
      for (std::size_t b : r.negative_pairs[j]) t1 |= r.modules.block(b);
    } else {
      t1 |= r.modules.block(r.negative_module[j]);
      for (std::size_t b : r.positive_pairs[j]) t1 |= r.modules.block(b);
    }
  }
  for (std::size_t i = 0; i < r.formula.clauses.size(); ++i) {
    const auto& clause = r.formula.clauses[i];
    for (std::size_t k = 0; k < clause.size(); ++k) {
      if (values[clause[k].var] == clause[k].positive) {
        t1.insert(r.clause_edges[i][k]);
      }
    }
  }
  Bipartition out{t1, t1.complement()};
  require_sound(verify_modular_trees(r.graph, r.modules, out), "lift to trees");
  return out;
}

// --- Perfect even factor -> 2-factor --------------------------------------

EvenFactorToTwoFactorResult reduce_even_factor_to_two_factor(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::string> left, right;
  for (std::size_t v = 0; v < n; ++v) {
    const std::string name = std::to_string(v);
    left.insert(left.end(), {name + "'", "w" + name + ".2", "w" + name + ".4"});
    right.insert(right.end(), {"w" + name + ".1", "w" + name + ".3", name + "''"});
  }
  EvenFactorToTwoFactorResult r;
  r.source = d;
  r.graph = BipartiteGraph(GroundSet(left), GroundSet(right));
  auto add = [&](std::size_t s, std::size_t t, std::string role) {
    r.graph.add_edge(s, t);
    r.provenance.push_back(std::move(role));
    return r.graph.edge_count() - 1;
  };
  for (std::size_t v = 0; v < n; ++v) {
    const std::string role = "path of vertex " + std::to_string(v);
    const std::size_t b = 3 * v;
    r.path_edges.push_back({add(b, b, role), add(b + 1, b, role),
                            add(b + 1, b + 1, role), add(b + 2, b + 1, role),
                            add(b + 2, b + 2, role)});
  }
  for (const auto& [u, v] : d.arcs()) {
    r.arc_edge.push_back(add(3 * u, 3 * v + 2,
                             "arc " + std::to_string(u) + "->" + std::to_string(v)));
  }
  return r;
}

std::vector<std::size_t> lift_even_factor(const EvenFactorToTwoFactorResult& r,
                                          const std::vector<std::size_t>& arcs) {
  require_verified(verify_perfect_even_factor(r.source, arcs), "even factor");
  std::vector<std::size_t> edges;
  for (const auto& path : r.path_edges) edges.insert(edges.end(), path.begin(), path.end());
  for (std::size_t a : arcs) edges.push_back(r.arc_edge[a]);
  std::sort(edges.begin(), edges.end());
  require_sound(verify_c4k2_two_factor(r.graph, edges), "lift to 2-factor");
  return edges;
}

std::vector<std::size_t> pull_two_factor(const EvenFactorToTwoFactorResult& r,
                                         const std::vector<std::size_t>& edges) {
  require_verified(verify_c4k2_two_factor(r.graph, edges), "2-factor");
  std::vector<std::size_t> arcs;
  for (std::size_t a = 0; a < r.arc_edge.size(); ++a) {
    if (std::find(edges.begin(), edges.end(), r.arc_edge[a]) != edges.end()) {
      arcs.push_back(a);
    }
  }
  require_sound(verify_perfect_even_factor(r.source, arcs), "pull to even factor");
  return arcs;
}

// --- 2-factor -> parity bases ---------------------------------------------

TwoFactorToParityResult reduce_two_factor_to_parity(const BipartiteGraph& g) {
  const std::size_t n = g.left_size();
  std::vector<std::string> left;
  TwoFactorToParityResult r;
  for (std::size_t s = 0; s < n; ++s) {
    const std::string name = g.left().label(s);
    left.push_back(name + "'");
    left.push_back(name + "''");
    r.provenance.push_back("first copy of " + name);
    r.provenance.push_back("second copy of " + name);
  }
  r.source = g;
  r.doubled = BipartiteGraph(GroundSet(left), g.right());
  for (const auto& [s, t] : g.edges()) {
    r.doubled.add_edge(2 * s, t);
    r.doubled.add_edge(2 * s + 1, t);
  }
  if (g.left_size() == g.right_size()) {
    r.instance = ParityInstance{transversal_matroid(r.doubled),
                                PartitionOfGroundSet::consecutive_pairs(2 * n)};
  }
  return r;
}

Bipartition lift_two_factor_to_parity(const TwoFactorToParityResult& r,
                                      const std::vector<std::size_t>& edges) {
  require_verified(verify_c4k2_two_factor(r.source, edges), "2-factor");
  if (!r.instance) throw PreconditionError("reduction output is a plain NO");
  const std::size_t n = r.source.left_size();
  // Neighbours of each left vertex, and of each right vertex, in the factor.
  std::vector<std::vector<std::size_t>> left_adj(n), right_adj(r.source.right_size());
  for (std::size_t e : edges) {
    const auto [s, t] = r.source.edges()[e];
    left_adj[s].push_back(t);
    right_adj[t].push_back(s);
  }
  std::vector<int> side(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    // Walk the cycle through left vertices, alternating sides.
    std::size_t s = start, came_from = BipartiteGraph::npos;
    int current = 0;
    while (side[s] == -1) {
      side[s] = current;
      current ^= 1;
      const std::size_t t =
          left_adj[s][0] != came_from ? left_adj[s][0] : left_adj[s][1];
      const std::size_t next = right_adj[t][0] != s ? right_adj[t][0] : right_adj[t][1];
      came_from = t;
      s = next;
    }
  }
  ElementSet first(2 * n);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] == 0) {
      first.insert(2 * s);
      first.insert(2 * s + 1);
    }
  }
  Bipartition out{first, first.complement()};
  require_sound(verify_parity_bases(*r.instance, out), "lift to parity bases");
  return out;
}

std::vector<std::size_t> pull_parity_to_two_factor(
    const TwoFactorToParityResult& r, const Bipartition& cert) {
  if (!r.instance) throw PreconditionError("reduction output is a plain NO");
  require_verified(verify_parity_bases(*r.instance, cert), "parity bases split");
  std::vector<std::size_t> edges;
  for (const ElementSet* cls : {&cert.first, &cert.second}) {
    const auto match = max_bipartite_matching(r.doubled, *cls);
    cls->for_each([&](std::size_t copy) {
      edges.push_back(r.source.edge_index(copy / 2, match[copy]));
    });
  }
  std::sort(edges.begin(), edges.end());
  require_sound(verify_c4k2_two_factor(r.source, edges), "pull to 2-factor");
  return edges;
}

// --- Partition matroid normal form ----------------------------------------

PartitionNormalFormResult reduce_to_partition_matroid_case(
    const CommonBasesInstance& inst) {
  inst.require_well_formed();
  if (inst.k != 2) throw PreconditionError("normal form supports k = 2 only");
  const std::size_t n = inst.first.size();
  if (n != 2 * rank(inst.first) || n != 2 * rank(inst.second)) {
    throw PreconditionError("normal form needs |S| = 2 r1(S) = 2 r2(S)");
  }
  std::vector<std::string> labels;
  PartitionNormalFormResult r;
  for (std::size_t e = 0; e < n; ++e) {
    labels.push_back(inst.first.ground().label(e));
    r.provenance.push_back("element " + labels.back() + " of the first matroid");
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t e = 0; e < n; ++e) {
    labels.push_back(inst.first.ground().label(e) + "#1");
    r.provenance.push_back("copy of " + inst.first.ground().label(e) +
                           " in the dual of the second matroid");
    blocks.push_back({e, n + e});
  }
  Matroid big =
      direct_sum(inst.first, parallel_copies(dual(inst.second), 1)).with_labels(labels);
  Matroid part = partition_matroid(PartitionOfGroundSet(2 * n, blocks),
                                   std::vector<std::size_t>(n, 1))
                     .with_labels(labels);
  r.source = inst;
  r.instance = CommonBasesInstance{big, part, 2};
  return r;
}

CommonBasesCertificate pull_partition_normal_form(
    const PartitionNormalFormResult& r, const CommonBasesCertificate& cert) {
  require_verified(verify_common_bases(r.instance, cert), "normal form split");
  const std::size_t n = r.source.first.size();
  CommonBasesCertificate out;
  for (const auto& c : cert.classes) out.classes.push_back(restrict_to_prefix(c, n));
  require_sound(verify_common_bases(r.source, out), "pull from normal form");
  return out;
}

CommonBasesCertificate lift_partition_normal_form(
    const PartitionNormalFormResult& r, const CommonBasesCertificate& cert) {
  require_verified(verify_common_bases(r.source, cert), "common bases split");
  const std::size_t n = r.source.first.size();
  CommonBasesCertificate out;
  for (const auto& c : cert.classes) {
    ElementSet lifted(2 * n);
    for (std::size_t e = 0; e < n; ++e) {
      lifted.insert(c.contains(e) ? e : n + e);
    }
    out.classes.push_back(lifted);
  }
  require_sound(verify_common_bases(r.instance, out), "lift to normal form");
  return out;
}

}  // namespace matkit
