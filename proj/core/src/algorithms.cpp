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
#include "matkit/algorithms.hpp"

#include <algorithm>
#include <deque>

#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"

namespace matkit {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// One augmentation step. Returns false when `current` is maximum.
bool augment_once(const Matroid& m1, const Matroid& m2, ElementSet& current) {
  const std::size_t n = m1.size();
  const std::vector<std::size_t> inside = current.elements();
  std::vector<std::size_t> outside;
  for (std::size_t e = 0; e < n; ++e) {
    if (!current.contains(e)) outside.push_back(e);
  }

  std::vector<char> is_sink(n);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<char> reached(n);
  std::deque<std::size_t> frontier;
  for (std::size_t x : outside) {
    const ElementSet grown = current.with(x);
    is_sink[x] = m2.is_independent(grown);
    if (m1.is_independent(grown)) {
      reached[x] = 1;
      frontier.push_back(x);
    }
  }

  // Level-synchronous BFS so the lowest-index sink on the shortest level
  // wins.
  while (!frontier.empty()) {
    std::size_t best_sink = kNone;
    for (std::size_t v : frontier) {
      if (is_sink[v] && (best_sink == kNone || v < best_sink)) best_sink = v;
    }
    if (best_sink != kNone) {
      for (std::size_t v = best_sink; v != kNone; v = parent[v]) {
        if (current.contains(v)) {
          current.erase(v);
        } else {
          current.insert(v);
        }
      }
      return true;
    }
    std::deque<std::size_t> next;
    for (std::size_t v : frontier) {
      if (!current.contains(v)) {
        // x -> y when I - y + x is independent in m2.
        for (std::size_t y : inside) {
          if (reached[y]) continue;
          if (m2.is_independent(current.without(y).with(v))) {
            reached[y] = 1;
            parent[y] = v;
            next.push_back(y);
          }
        }
      } else {
        // y -> x when I - y + x is independent in m1.
        for (std::size_t x : outside) {
          if (reached[x]) continue;
          if (m1.is_independent(current.without(v).with(x))) {
            reached[x] = 1;
            parent[x] = v;
            next.push_back(x);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

ElementSet max_common_independent(const Matroid& m1, const Matroid& m2) {
  if (m1.size() != m2.size()) {
    throw DomainError("matroid intersection needs a common ground set");
  }
  ElementSet current = m1.empty_set();
  while (augment_once(m1, m2, current)) {
  }
  return current;
}

std::optional<std::vector<ElementSet>> partition_into_independent(
    const Matroid& m, std::size_t k) {
  if (k < 1) throw DomainError("partition into k sets needs k >= 1");
  const std::size_t n = m.size();
  const Matroid copy_sum = direct_sum(std::vector<Matroid>(k, m));
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t j = 0; j < k; ++j) blocks[e].push_back(j * n + e);
  }
  std::vector<std::vector<std::size_t>> nonempty;
  for (auto& b : blocks) nonempty.push_back(std::move(b));
  if (n == 0) return std::vector<ElementSet>(k, ElementSet(0));
  const Matroid one_copy_each = partition_matroid(
      PartitionOfGroundSet(n * k, nonempty), std::vector<std::size_t>(n, 1));
  const ElementSet chosen = max_common_independent(copy_sum, one_copy_each);
  if (chosen.count() != n) return std::nullopt;
  std::vector<ElementSet> classes(k, ElementSet(n));
  chosen.for_each([&](std::size_t e) { classes[e / n].insert(e % n); });
  return classes;
}

NecessaryCondition common_bases_necessary_check(const Matroid& m1,
                                                const Matroid& m2,
                                                std::size_t k) {
  if (m1.size() != m2.size()) {
    throw DomainError("common bases need a common ground set");
  }
  NecessaryCondition out;
  const std::size_t n = m1.size();
  const std::size_t r1 = rank(m1), r2 = rank(m2);
  out.size_condition = k >= 1 && n == k * r1 && n == k * r2;
  out.m1_partitionable = partition_into_independent(m1, k).has_value();
  out.m2_partitionable = partition_into_independent(m2, k).has_value();
  out.passed =
      out.size_condition && out.m1_partitionable && out.m2_partitionable;
  if (!out.size_condition) {
    out.reason = "|S| = " + std::to_string(n) + " but k * rank = " +
                 std::to_string(k * r1) + " / " + std::to_string(k * r2);
  } else if (!out.m1_partitionable) {
    out.reason = "ground set does not split into k independent sets of M1";
  } else if (!out.m2_partitionable) {
    out.reason = "ground set does not split into k independent sets of M2";
  } else {
    out.reason = "necessary condition holds";
  }
  return out;
}

}  // namespace matkit
