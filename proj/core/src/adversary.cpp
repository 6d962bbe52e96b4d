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
#include "matkit/adversary.hpp"

#include <algorithm>
#include <bit>

#include "matkit/errors.hpp"

namespace matkit {

namespace {

void choose(std::size_t from, std::size_t count, std::size_t start,
            std::vector<std::size_t>& picked,
            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (picked.size() == count) {
    visit(picked);
    return;
  }
  for (std::size_t i = start; i + (count - picked.size()) <= from; ++i) {
    picked.push_back(i);
    choose(from, count, i + 1, picked, visit);
    picked.pop_back();
  }
}

}  // namespace

std::vector<ElementSet> parity_sets_of_half_size(
    const PartitionOfGroundSet& pairing) {
  const std::size_t pairs = pairing.block_count();
  std::vector<ElementSet> out;
  std::vector<std::size_t> picked;
  choose(pairs, pairs / 2, 0, picked, [&](const std::vector<std::size_t>& idx) {
    ElementSet x(pairing.universe());
    for (std::size_t i : idx) x |= pairing.block(i);
    out.push_back(x);
  });
  return out;
}

AdversaryPair build_adversary(std::size_t t,
                              const std::optional<PartitionOfGroundSet>& pairing,
                              const std::optional<ElementSet>& hidden) {
  if (t < 1) throw DomainError("adversary needs t >= 1");
  const std::size_t n = 4 * t;
  PartitionOfGroundSet pairs =
      pairing ? *pairing : PartitionOfGroundSet::consecutive_pairs(n);
  if (pairs.universe() != n || pairs.block_count() != 2 * t ||
      !pairs.all_blocks_have_size(2)) {
    throw DomainError("pairing must split 4t elements into 2t pairs");
  }
  ElementSet x0(n);
  if (hidden) {
    x0 = *hidden;
  } else {
    for (std::size_t i = 0; i < t; ++i) x0 |= pairs.block(i);
  }
  if (x0.universe_size() != n || x0.count() != 2 * t || !pairs.is_modular(x0)) {
    throw DomainError("hidden set must be a parity set of size 2t");
  }

  HyperplaneFamily all{GroundSet(n), 2 * t, parity_sets_of_half_size(pairs)};
  HyperplaneFamily reduced = all;
  const ElementSet complement = x0.complement();
  std::erase_if(reduced.sets, [&](const ElementSet& s) {
    return s == x0 || s == complement;
  });
  return AdversaryPair{t, pairs, x0, paving_matroid(all), paving_matroid(reduced)};
}

std::uint64_t count_parity_hiding_sets(std::size_t t) {
  if (t > 16) throw DomainError("count_parity_hiding_sets supports t <= 16");
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= t; ++i) c = c * (t + i) / i;
  return c;
}

std::vector<ElementSet> disagreement_sets(const AdversaryPair& pair) {
  const std::size_t n = pair.blocked.size();
  if (n > kDefaultExhaustiveCap) {
    throw ResourceLimitError("disagreement sweep too large", n,
                             kDefaultExhaustiveCap);
  }
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const ElementSet x = ElementSet::from_mask(n, m);
    if (pair.blocked.is_independent(x) != pair.planted.is_independent(x)) {
      out.push_back(x);
    }
  }
  return out;
}

QuerySolver named_query_solver(const std::string& name) {
  if (name == "backtrack" || name == "sweep") {
    SolveOptions options;
    options.threads = 1;  // keeps the query order deterministic
    options.strategy =
        name == "sweep" ? SolveStrategy::kSweep : SolveStrategy::kBacktrack;
    return [options](const ModularInstance& inst) {
      return solve_modular_bases(inst, options);
    };
  }
  if (name == "exhaustive") {
    return [](const ModularInstance& inst) -> std::optional<Bipartition> {
      const std::size_t n = inst.matroid.size();
      if (n > kDefaultExhaustiveCap) {
        throw ResourceLimitError("exhaustive solver too large", n,
                                 kDefaultExhaustiveCap);
      }
      std::vector<std::uint64_t> masks(std::uint64_t{1} << n);
      for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
      std::stable_sort(masks.begin(), masks.end(), [](auto a, auto b) {
        return std::popcount(a) < std::popcount(b);
      });
      std::vector<char> independent(masks.size());
      for (std::uint64_t m : masks) {
        independent[m] = inst.matroid.is_independent(ElementSet::from_mask(n, m));
      }
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      std::size_t r = 0;
      for (std::uint64_t m = 0; m <= full; ++m) {
        if (independent[m]) r = std::max<std::size_t>(r, std::popcount(m));
      }
      if (n != 2 * r) return std::nullopt;
      for (std::uint64_t m = 0; m <= full; ++m) {
        if (!(m & 1) || static_cast<std::size_t>(std::popcount(m)) != r) continue;
        const ElementSet a = ElementSet::from_mask(n, m);
        if (inst.modules.is_modular(a) && independent[m] && independent[full & ~m]) {
          return Bipartition{a, a.complement()};
        }
      }
      return std::nullopt;
    };
  }
  throw DomainError("unknown solver '" + name +
                    "' (expected backtrack, sweep or exhaustive)");
}

ExperimentReport run_indistinguishability(const AdversaryPair& pair,
                                          const QuerySolver& solver,
                                          AdversaryTarget target) {
  const Matroid& hidden_target =
      target == AdversaryTarget::kBlocked ? pair.blocked : pair.planted;
  LoggedMatroid logged = with_query_log(hidden_target);
  const auto answer = solver(ModularInstance{logged.matroid, pair.pairing});

  ExperimentReport report;
  report.t = pair.t;
  report.target = target;
  report.answered_yes = answer.has_value();
  const auto entries = logged.log->entries();
  report.total_queries = entries.size();
  const ElementSet complement = pair.hidden.complement();
  bool agree = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const ElementSet& x = entries[i].set;
    const bool is_hidden = x == pair.hidden || x == complement;
    if (is_hidden && !report.distinguishing_query_index) {
      report.distinguishing_query_index = i;
    }
    const bool a = pair.blocked.is_independent(x);
    const bool b = pair.planted.is_independent(x);
    if (entries[i].answer != hidden_target.is_independent(x)) agree = false;
    if (a != b && !is_hidden) agree = false;
    if (a != b && !report.distinguishing_query_index) agree = false;
  }
  report.agreement_verified = agree;
  return report;
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json j = {
      {"t", report.t},
      {"target", report.target == AdversaryTarget::kBlocked ? "blocked" : "planted"},
      {"answer", report.answered_yes ? "YES" : "NO"},
      {"total_queries", report.total_queries},
      {"agreement_verified", report.agreement_verified}};
  j["distinguishing_query_index"] =
      report.distinguishing_query_index
          ? nlohmann::json(*report.distinguishing_query_index)
          : nlohmann::json(nullptr);
  return j;
}

}  // namespace matkit
