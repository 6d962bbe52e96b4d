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
#include "matkit/matroid.hpp"

#include <unordered_set>
#include <utility>

namespace matkit {

namespace {

class EmptyGroundOracle final : public IndependenceOracle {
 public:
  bool independent(const ElementSet&) const override { return true; }
  nlohmann::json describe() const override {
    return {{"kind", "free"}, {"n", 0}};
  }
};

}  // namespace

Matroid::Matroid()
    : Matroid(GroundSet(0), std::make_shared<EmptyGroundOracle>()) {}

Matroid::Matroid(GroundSet ground,
                 std::shared_ptr<const IndependenceOracle> oracle)
    : ground_(std::make_shared<const GroundSet>(std::move(ground))),
      oracle_(std::move(oracle)) {
  if (!oracle_) throw DomainError("matroid requires an oracle");
}

bool Matroid::is_independent(const ElementSet& x) const {
  if (x.universe_size() != ground_->size()) {
    throw DomainError("set over a universe of size " +
                      std::to_string(x.universe_size()) +
                      " queried against a matroid on " +
                      std::to_string(ground_->size()) + " elements");
  }
  return oracle_->independent(x);
}

std::string Matroid::kind() const {
  auto d = oracle_->describe();
  return d.value("kind", std::string("unknown"));
}

nlohmann::json Matroid::to_json() const {
  nlohmann::json j = describe();
  if (ground_->has_labels()) j["labels"] = ground_->labels();
  return j;
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size()) {
    throw DomainError("label count does not match ground set size");
  }
  return Matroid(GroundSet(std::move(labels)), oracle_);
}

bool is_independent(const Matroid& m, const ElementSet& x) {
  return m.is_independent(x);
}

std::size_t rank(const Matroid& m, const ElementSet& x) {
  if (x.universe_size() != m.size()) {
    throw DomainError("rank queried with a set over the wrong universe");
  }
  ElementSet kept = m.empty_set();
  std::size_t r = 0;
  x.for_each([&](std::size_t e) {
    kept.insert(e);
    if (m.is_independent(kept)) {
      ++r;
    } else {
      kept.erase(e);
    }
  });
  return r;
}

std::size_t rank(const Matroid& m) { return rank(m, m.full_set()); }

bool is_basis(const Matroid& m, const ElementSet& x, std::size_t full_rank) {
  return x.count() == full_rank && m.is_independent(x);
}

bool is_basis(const Matroid& m, const ElementSet& x) {
  return is_basis(m, x, rank(m));
}

namespace {

void require_cap(const Matroid& m, std::size_t cap, const char* what) {
  if (m.size() > cap || m.size() > 63) {
    throw ResourceLimitError(what, m.size(), cap < 63 ? cap : 63);
  }
}

}  // namespace

std::vector<bool> independence_table(const Matroid& m, std::size_t cap) {
  require_cap(m, cap, "independence table");
  const std::size_t n = m.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> table(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    table[mask] = m.is_independent(ElementSet::from_mask(n, mask));
  }
  return table;
}

std::vector<ElementSet> enumerate_bases(const Matroid& m, std::size_t cap) {
  require_cap(m, cap, "basis enumeration");
  const std::size_t n = m.size();
  const std::size_t r = rank(m);
  std::vector<ElementSet> bases;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
    ElementSet x = ElementSet::from_mask(n, mask);
    if (m.is_independent(x)) bases.push_back(std::move(x));
  }
  return bases;
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

AxiomReport check_independence_axioms(const Matroid& m, std::size_t cap) {
  const std::vector<bool> table = independence_table(m, cap);
  const std::size_t n = m.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  AxiomReport report;

  AxiomCheck i1;
  i1.axiom = "I1";
  if (!table[0]) {
    i1.passed = false;
    i1.x = m.empty_set();
    i1.detail = "the empty set is dependent";
  }
  report.checks.push_back(i1);

  // Removing one element at a time suffices for downward closure.
  AxiomCheck i2;
  i2.axiom = "I2";
  for (std::uint64_t y = 0; y < total && i2.passed; ++y) {
    if (!table[y]) continue;
    for (std::size_t e = n; e-- > 0;) {
      if (!((y >> e) & 1)) continue;
      const std::uint64_t x = y & ~(std::uint64_t{1} << e);
      if (!table[x]) {
        i2.passed = false;
        i2.x = ElementSet::from_mask(n, x);
        i2.y = ElementSet::from_mask(n, y);
        i2.detail = "subset of an independent set is dependent";
        break;
      }
    }
  }
  report.checks.push_back(i2);

  std::vector<std::vector<std::uint64_t>> by_size(n + 1);
  for (std::uint64_t s = 0; s < total; ++s) {
    if (table[s]) by_size[__builtin_popcountll(s)].push_back(s);
  }
  AxiomCheck i3;
  i3.axiom = "I3";
  for (std::size_t k = 0; k < n && i3.passed; ++k) {
    for (std::uint64_t x : by_size[k]) {
      for (std::uint64_t y : by_size[k + 1]) {
        std::uint64_t candidates = y & ~x;
        bool extended = false;
        while (candidates != 0) {
          const std::uint64_t bit = candidates & (~candidates + 1);
          if (table[x | bit]) {
            extended = true;
            break;
          }
          candidates ^= bit;
        }
        if (!extended) {
          i3.passed = false;
          i3.x = ElementSet::from_mask(n, x);
          i3.y = ElementSet::from_mask(n, y);
          i3.detail = "no element of y - x extends x";
          break;
        }
      }
      if (!i3.passed) break;
    }
  }
  report.checks.push_back(i3);
  return report;
}

AxiomReport check_basis_axioms(const std::vector<ElementSet>& family) {
  AxiomReport report;
  AxiomCheck b1;
  b1.axiom = "B1";
  if (family.empty()) {
    b1.passed = false;
    b1.detail = "the family of bases is empty";
  }
  report.checks.push_back(b1);

  AxiomCheck b2;
  b2.axiom = "B2";
  if (!family.empty()) {
    const std::size_t universe = family.front().universe_size();
    for (const auto& b : family) {
      if (b.universe_size() != universe) {
        throw DomainError("basis family mixes universes");
      }
    }
    const std::unordered_set<ElementSet, ElementSetHash> members(
        family.begin(), family.end());
    for (const auto& b1set : family) {
      for (const auto& b2set : family) {
        const ElementSet only_first = b1set - b2set;
        const ElementSet only_second = b2set - b1set;
        for (std::size_t u : only_first.elements()) {
          bool exchanged = false;
          only_second.for_each([&](std::size_t v) {
            if (!exchanged &&
                members.contains(b1set.without(u).with(v))) {
              exchanged = true;
            }
          });
          if (!exchanged) {
            b2.passed = false;
            b2.x = b1set;
            b2.y = b2set;
            b2.element = u;
            b2.detail = "no v in y - x makes x - u + v a basis";
            report.checks.push_back(b2);
            return report;
          }
        }
      }
    }
  }
  report.checks.push_back(b2);
  return report;
}

void QueryLog::record(const ElementSet& x, bool answer) {
  std::lock_guard<std::mutex> lock(mu_);
  if (seen_.insert(x).second) entries_.push_back({x, answer});
}

std::size_t QueryLog::count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::vector<ElementSet> QueryLog::distinct_queries() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<ElementSet> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.set);
  return out;
}

std::vector<QueryLog::Entry> QueryLog::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_;
}

void QueryLog::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.clear();
  seen_.clear();
}

namespace {

class LoggingOracle final : public IndependenceOracle {
 public:
  LoggingOracle(std::shared_ptr<const IndependenceOracle> inner,
                std::shared_ptr<QueryLog> log)
      : inner_(std::move(inner)), log_(std::move(log)) {}

  bool independent(const ElementSet& x) const override {
    const bool answer = inner_->independent(x);
    log_->record(x, answer);
    return answer;
  }

  nlohmann::json describe() const override { return inner_->describe(); }

 private:
  std::shared_ptr<const IndependenceOracle> inner_;
  std::shared_ptr<QueryLog> log_;
};

}  // namespace

LoggedMatroid with_query_log(const Matroid& m) {
  auto log = std::make_shared<QueryLog>();
  Matroid wrapped(m.ground(), std::make_shared<LoggingOracle>(m.oracle(), log));
  return {std::move(wrapped), std::move(log)};
}

}  // namespace matkit
