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
#include "matkit/certificates.hpp"

#include <algorithm>

#include "matkit/constructions.hpp"

namespace matkit {

namespace {

Verdict check_split(const Bipartition& cert, std::size_t n) {
  if (cert.first.universe_size() != n || cert.second.universe_size() != n) {
    return Verdict::no("certificate sets are over the wrong universe");
  }
  if (cert.first.intersects(cert.second)) {
    return Verdict::no("classes overlap");
  }
  if ((cert.first | cert.second).count() != n) {
    return Verdict::no("classes do not cover the ground set");
  }
  return Verdict::yes();
}

}  // namespace

Verdict verify_common_bases(const CommonBasesInstance& inst,
                            const CommonBasesCertificate& cert) {
  const std::size_t n = inst.first.size();
  if (inst.second.size() != n) return Verdict::no("ground sizes differ");
  if (cert.classes.size() != inst.k) {
    return Verdict::no("expected " + std::to_string(inst.k) + " classes, got " +
                       std::to_string(cert.classes.size()));
  }
  ElementSet seen(n);
  for (const auto& c : cert.classes) {
    if (c.universe_size() != n) return Verdict::no("class over wrong universe");
    if (c.intersects(seen)) return Verdict::no("classes overlap");
    seen |= c;
  }
  if (seen.count() != n) return Verdict::no("classes do not cover the ground set");
  const std::size_t r1 = rank(inst.first), r2 = rank(inst.second);
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    if (!is_basis(inst.first, cert.classes[i], r1)) {
      return Verdict::no("class " + std::to_string(i) +
                         " is not a basis of the first matroid");
    }
    if (!is_basis(inst.second, cert.classes[i], r2)) {
      return Verdict::no("class " + std::to_string(i) +
                         " is not a basis of the second matroid");
    }
  }
  return Verdict::yes();
}

Verdict verify_modular_bases(const ModularInstance& inst,
                             const Bipartition& cert) {
  const std::size_t n = inst.matroid.size();
  if (inst.modules.universe() != n) return Verdict::no("module universe mismatch");
  if (Verdict v = check_split(cert, n); !v) return v;
  if (!inst.modules.is_modular(cert.first) ||
      !inst.modules.is_modular(cert.second)) {
    return Verdict::no("a module is split between the classes");
  }
  const std::size_t r = rank(inst.matroid);
  if (!is_basis(inst.matroid, cert.first, r)) {
    return Verdict::no("first class is not a basis");
  }
  if (!is_basis(inst.matroid, cert.second, r)) {
    return Verdict::no("second class is not a basis");
  }
  return Verdict::yes();
}

Verdict verify_parity_bases(const ParityInstance& inst, const Bipartition& cert) {
  if (!inst.pairs.all_blocks_have_size(2)) {
    return Verdict::no("instance modules are not all pairs");
  }
  return verify_modular_bases(inst.as_modular(), cert);
}

Verdict verify_modular_trees(const MultiGraph& g,
                             const PartitionOfGroundSet& modules,
                             const Bipartition& cert) {
  const std::size_t n = g.edge_count();
  if (modules.universe() != n) return Verdict::no("module universe mismatch");
  if (Verdict v = check_split(cert, n); !v) return v;
  if (!modules.is_modular(cert.first) || !modules.is_modular(cert.second)) {
    return Verdict::no("a module is split between the trees");
  }
  const Matroid m = graphic_matroid(g);
  const std::size_t tree_size = g.vertex_count() == 0 ? 0 : g.vertex_count() - 1;
  for (const auto* t : {&cert.first, &cert.second}) {
    if (t->count() != tree_size || !m.is_independent(*t)) {
      return Verdict::no("a class is not a spanning tree");
    }
  }
  return Verdict::yes();
}

Verdict verify_nae_assignment(const CnfFormula& formula,
                              const std::vector<bool>& values) {
  if (values.size() != formula.variables) {
    return Verdict::no("assignment has " + std::to_string(values.size()) +
                       " values for " + std::to_string(formula.variables) +
                       " variables");
  }
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    if (!nae_satisfies({formula.variables, {formula.clauses[c]}}, values)) {
      return Verdict::no("clause " + std::to_string(c + 1) +
                         " has all literals equal");
    }
  }
  return Verdict::yes();
}

std::vector<std::size_t> cycle_cover_lengths(
    const Digraph& d, const std::vector<std::size_t>& arcs) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> succ(n, n), in(n, 0);
  for (std::size_t a : arcs) {
    if (a >= d.arc_count()) return {};
    const auto [u, v] = d.arcs()[a];
    if (succ[u] != n) return {};
    succ[u] = v;
    ++in[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (succ[v] == n || in[v] != 1) return {};
  }
  std::vector<std::size_t> lengths;
  std::vector<char> seen(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::size_t len = 0;
    for (std::size_t w = v; !seen[w]; w = succ[w]) {
      seen[w] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

Verdict verify_perfect_even_factor(const Digraph& d,
                                   const std::vector<std::size_t>& arcs) {
  if (d.vertex_count() == 0) {
    return arcs.empty() ? Verdict::yes() : Verdict::no("arcs on an empty digraph");
  }
  const auto lengths = cycle_cover_lengths(d, arcs);
  if (lengths.empty()) {
    return Verdict::no("arcs do not give every vertex in- and out-degree 1");
  }
  for (std::size_t len : lengths) {
    if (len % 2) return Verdict::no("cycle of odd length " + std::to_string(len));
  }
  return Verdict::yes();
}

Verdict verify_c4k2_two_factor(const BipartiteGraph& g,
                               const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return Verdict::no("repeated edge");
  }
  if (g.left_size() + g.right_size() == 0) {
    return edges.empty() ? Verdict::yes() : Verdict::no("edges on an empty graph");
  }
  for (std::size_t e : edges) {
    if (e >= g.edge_count()) return Verdict::no("edge index out of range");
  }
  const auto lengths = two_factor_cycle_lengths(g, edges);
  if (lengths.empty()) return Verdict::no("edge set is not a 2-factor");
  for (std::size_t len : lengths) {
    if (len % 4) {
      return Verdict::no("cycle of length " + std::to_string(len) +
                         " is not a multiple of 4");
    }
  }
  return Verdict::yes();
}

}  // namespace matkit
