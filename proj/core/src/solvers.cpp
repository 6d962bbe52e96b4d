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
#include "matkit/solvers.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"

namespace matkit {

namespace {

std::size_t cap_or(const SolveOptions& o, std::size_t fallback) {
  return o.cap.value_or(fallback);
}

void require_within(std::size_t size, std::size_t cap, const std::string& what) {
  if (size > cap) {
    throw ResourceLimitError(what + " is too large for exhaustive search",
                             size, cap);
  }
}

std::size_t worker_count(const SolveOptions& o, std::uint64_t work) {
  std::size_t t = o.threads;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<std::size_t>(
      std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, work / 1024)));
}

// Runs accept(mask) for mask in [0, total) across workers and returns the
// smallest accepted mask. Workers stop early once a smaller hit is known.
std::optional<std::uint64_t> parallel_first(
    std::uint64_t total, std::size_t workers,
    const std::function<bool(std::uint64_t)>& accept) {
  std::atomic<std::uint64_t> best{total};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      // Interleaved blocks keep the search roughly in ascending order.
      constexpr std::uint64_t kBlock = 256;
      for (std::uint64_t start = w * kBlock; start < total;
           start += workers * kBlock) {
        if (start >= best.load(std::memory_order_relaxed)) return;
        const std::uint64_t end = std::min(total, start + kBlock);
        for (std::uint64_t m = start; m < end; ++m) {
          if (accept(m)) {
            std::uint64_t cur = best.load();
            while (m < cur && !best.compare_exchange_weak(cur, m)) {
            }
            return;
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (best.load() == total) return std::nullopt;
  return best.load();
}

std::optional<CommonBasesCertificate> common_bases_sweep(
    const CommonBasesInstance& inst, std::size_t r, const SolveOptions& o) {
  const std::size_t n = inst.first.size();
  if (n == 0) return CommonBasesCertificate{{ElementSet(0), ElementSet(0)}};
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const auto hit = parallel_first(total, worker_count(o, total), [&](std::uint64_t m) {
    const std::uint64_t cls = (m << 1) | 1;
    if (static_cast<std::size_t>(std::popcount(cls)) != r) return false;
    const ElementSet a = ElementSet::from_mask(n, cls);
    const ElementSet b = a.complement();
    return inst.first.is_independent(a) && inst.second.is_independent(a) &&
           inst.first.is_independent(b) && inst.second.is_independent(b);
  });
  if (!hit) return std::nullopt;
  const ElementSet a = ElementSet::from_mask(n, (*hit << 1) | 1);
  return CommonBasesCertificate{{a, a.complement()}};
}

std::optional<CommonBasesCertificate> common_bases_backtrack(
    const CommonBasesInstance& inst, std::size_t r) {
  const std::size_t n = inst.first.size();
  std::vector<ElementSet> classes(inst.k, ElementSet(n));
  std::function<bool(std::size_t, std::size_t)> place =
      [&](std::size_t e, std::size_t opened) -> bool {
    if (e == n) return true;  // sizes force every class to have r elements
    for (std::size_t c = 0; c < inst.k && c <= opened; ++c) {
      if (classes[c].count() >= r) continue;
      ElementSet grown = classes[c].with(e);
      if (!inst.first.is_independent(grown) ||
          !inst.second.is_independent(grown)) {
        continue;
      }
      std::swap(classes[c], grown);
      if (place(e + 1, std::max(opened, c + 1))) return true;
      std::swap(classes[c], grown);
    }
    return false;
  };
  if (!place(0, 0)) return std::nullopt;
  return CommonBasesCertificate{classes};
}

std::optional<Bipartition> modular_sweep(const ModularInstance& inst,
                                         std::size_t r, const SolveOptions& o) {
  const std::size_t m = inst.modules.block_count();
  const std::size_t n = inst.matroid.size();
  const std::uint64_t total = std::uint64_t{1} << (m - 1);
  std::vector<std::size_t> sizes;
  for (const auto& b : inst.modules.blocks()) sizes.push_back(b.count());
  auto build = [&](std::uint64_t mask) {
    ElementSet a(n);
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) a |= inst.modules.block(i);
    }
    return a;
  };
  const auto hit = parallel_first(total, worker_count(o, total), [&](std::uint64_t x) {
    const std::uint64_t mask = (x << 1) | 1;
    std::size_t size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) size += sizes[i];
    }
    if (size != r) return false;
    const ElementSet a = build(mask);
    return inst.matroid.is_independent(a) &&
           inst.matroid.is_independent(a.complement());
  });
  if (!hit) return std::nullopt;
  const ElementSet a = build((*hit << 1) | 1);
  return Bipartition{a, a.complement()};
}

std::optional<Bipartition> modular_backtrack(const ModularInstance& inst,
                                             std::size_t r) {
  const std::size_t m = inst.modules.block_count();
  const std::size_t n = inst.matroid.size();
  std::array<ElementSet, 2> cls = {ElementSet(n), ElementSet(n)};
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == m) return true;
    const ElementSet& block = inst.modules.block(i);
    for (std::size_t c = 0; c < (i == 0 ? 1u : 2u); ++c) {
      if (cls[c].count() + block.count() > r) continue;
      ElementSet grown = cls[c] | block;
      if (!inst.matroid.is_independent(grown)) continue;
      std::swap(cls[c], grown);
      if (place(i + 1)) return true;
      std::swap(cls[c], grown);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return Bipartition{cls[0], cls[1]};
}

}  // namespace

std::optional<CommonBasesCertificate> solve_common_bases(
    const CommonBasesInstance& inst, const SolveOptions& options) {
  inst.require_well_formed();
  const std::size_t n = inst.first.size();
  require_within(n, cap_or(options, kCommonBasesCap), "ground set size");
  const std::size_t r1 = rank(inst.first), r2 = rank(inst.second);
  if (r1 != r2 || n != inst.k * r1) return std::nullopt;
  const bool sweep = options.strategy == SolveStrategy::kSweep ||
                     (options.strategy == SolveStrategy::kAuto && inst.k == 2);
  if (sweep && inst.k == 2) return common_bases_sweep(inst, r1, options);
  if (sweep) throw DomainError("the sweep strategy handles k = 2 only");
  return common_bases_backtrack(inst, r1);
}

std::optional<Bipartition> solve_modular_bases(const ModularInstance& inst,
                                               const SolveOptions& options) {
  inst.require_well_formed();
  const std::size_t m = inst.modules.block_count();
  require_within(m, cap_or(options, kModuleCap), "module count");
  const std::size_t n = inst.matroid.size();
  const std::size_t r = rank(inst.matroid);
  if (n != 2 * r) return std::nullopt;
  if (m == 0) return Bipartition{ElementSet(0), ElementSet(0)};
  if (options.strategy == SolveStrategy::kSweep) {
    return modular_sweep(inst, r, options);
  }
  return modular_backtrack(inst, r);
}

std::optional<Bipartition> solve_parity_bases(const ParityInstance& inst,
                                              const SolveOptions& options) {
  inst.require_well_formed();
  return solve_modular_bases(inst.as_modular(), options);
}

std::optional<Bipartition> solve_modular_trees(
    const MultiGraph& g, const PartitionOfGroundSet& modules,
    const SolveOptions& options) {
  if (g.vertex_count() == 0 || g.edge_count() != 2 * (g.vertex_count() - 1)) {
    if (g.vertex_count() <= 1 && g.edge_count() == 0) {
      return Bipartition{ElementSet(0), ElementSet(0)};
    }
    return std::nullopt;
  }
  return solve_modular_bases({graphic_matroid(g), modules}, options);
}

std::optional<std::vector<bool>> solve_naesat(const CnfFormula& formula,
                                              const SolveOptions& options) {
  const std::size_t n = formula.variables;
  require_within(n, cap_or(options, kNaeVariableCap), "variable count");
  if (n == 0) {
    if (formula.clauses.empty()) return std::vector<bool>{};
    return std::nullopt;
  }
  auto decode = [n](std::uint64_t m) {
    std::vector<bool> v(n);
    v[0] = true;
    for (std::size_t i = 1; i < n; ++i) v[i] = (m >> (i - 1)) & 1;
    return v;
  };
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const auto hit = parallel_first(total, worker_count(options, total),
                                  [&](std::uint64_t m) {
                                    return nae_satisfies(formula, decode(m));
                                  });
  if (!hit) return std::nullopt;
  return decode(*hit);
}

std::optional<std::vector<std::size_t>> solve_perfect_even_factor(
    const Digraph& d, const SolveOptions& options) {
  const std::size_t n = d.vertex_count();
  require_within(n, cap_or(options, kEvenFactorCap), "vertex count");
  std::vector<std::vector<std::size_t>> out_arcs(n);
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    out_arcs[d.arcs()[a].first].push_back(a);
  }
  std::vector<std::size_t> succ(n, n), chosen(n, 0);
  std::vector<char> taken(n);
  std::function<bool(std::size_t)> place = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t a : out_arcs[v]) {
      const std::size_t w = d.arcs()[a].second;
      if (taken[w]) continue;
      // Walking forward from w either returns to v (closing a cycle) or
      // stops at an unassigned vertex.
      std::size_t len = 1, x = w;
      while (x != v && succ[x] != n) {
        x = succ[x];
        ++len;
      }
      if (x == v && len % 2) continue;
      taken[w] = 1;
      succ[v] = w;
      chosen[v] = a;
      if (place(v + 1)) return true;
      succ[v] = n;
      taken[w] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<std::size_t>> solve_c4k2_two_factor(
    const BipartiteGraph& g, const SolveOptions& options) {
  const std::size_t nv = g.left_size() + g.right_size();
  const std::size_t ne = g.edge_count();
  require_within(ne > nv ? ne - nv : 0, cap_or(options, kTwoFactorSlackCap),
                 "edge surplus |E| - |V|");
  if (nv == 0) return std::vector<std::size_t>{};
  if (g.left_size() != g.right_size()) return std::nullopt;

  std::vector<std::vector<std::size_t>> incident(nv);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t e = 0; e < ne; ++e) {
    const auto [s, t] = g.edges()[e];
    ends.push_back({s, g.left_size() + t});
    incident[s].push_back(e);
    incident[g.left_size() + t].push_back(e);
  }
  std::vector<int> state(ne, 0);  // 0 open, 1 in, -1 out
  std::vector<std::size_t> degree(nv, 0);
  std::vector<std::size_t> result;

  std::function<bool()> search = [&]() -> bool {
    std::size_t best = nv, best_avail = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if (degree[v] == 2) continue;
      std::size_t avail = 0;
      for (std::size_t e : incident[v]) {
        if (state[e] != 0) continue;
        const std::size_t other = ends[e].first == v ? ends[e].second : ends[e].first;
        if (degree[other] < 2) ++avail;
      }
      if (avail < 2 - degree[v]) return false;
      if (best == nv || avail < best_avail) {
        best = v;
        best_avail = avail;
      }
    }
    if (best == nv) {
      std::vector<std::size_t> in;
      for (std::size_t e = 0; e < ne; ++e) {
        if (state[e] == 1) in.push_back(e);
      }
      if (!verify_c4k2_two_factor(g, in)) return false;
      result = std::move(in);
      return true;
    }
    for (std::size_t e : incident[best]) {
      if (state[e] != 0) continue;
      const auto [a, b] = ends[e];
      if (degree[a] == 2 || degree[b] == 2) continue;
      state[e] = 1;
      ++degree[a];
      ++degree[b];
      if (search()) return true;
      --degree[a];
      --degree[b];
      state[e] = -1;
      const bool found = search();
      state[e] = 0;
      return found;
    }
    return false;
  };
  if (!search()) return std::nullopt;
  return result;
}

}  // namespace matkit
