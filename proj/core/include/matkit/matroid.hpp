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
#ifndef MATKIT_MATROID_HPP_
#define MATKIT_MATROID_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "matkit/element_set.hpp"
#include "matkit/errors.hpp"

namespace matkit {

// Answers "is X independent?" for subsets of a fixed ground set.
// Implementations are immutable after construction and must be safe to
// query from several threads at once.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  // `x` has already been checked to be over the right universe.
  virtual bool independent(const ElementSet& x) const = 0;

  // Descriptor tree naming the construction, e.g. {"kind": "uniform", ...}.
  virtual nlohmann::json describe() const = 0;
};

// A matroid given by an independence oracle. Cheap to copy; copies share
// the immutable oracle.
class Matroid {
 public:
  // The matroid on the empty ground set.
  Matroid();
  Matroid(GroundSet ground, std::shared_ptr<const IndependenceOracle> oracle);

  const GroundSet& ground() const { return *ground_; }
  std::size_t size() const { return ground_->size(); }
  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }

  // Throws DomainError when x is over a different universe.
  bool is_independent(const ElementSet& x) const;

  std::string kind() const;
  nlohmann::json describe() const { return oracle_->describe(); }
  // describe() plus the ground set labels, when present.
  nlohmann::json to_json() const;

  // Same oracle, new display labels (must be unique, one per element).
  Matroid with_labels(std::vector<std::string> labels) const;

  const std::shared_ptr<const IndependenceOracle>& oracle() const {
    return oracle_;
  }

 private:
  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const IndependenceOracle> oracle_;
};

bool is_independent(const Matroid& m, const ElementSet& x);

// Greedy rank: scans x in ascending element order and keeps an element iff
// the kept set stays independent. Issues one oracle query per member of x.
std::size_t rank(const Matroid& m, const ElementSet& x);
std::size_t rank(const Matroid& m);

bool is_basis(const Matroid& m, const ElementSet& x);
// Same test against a precomputed full rank, saving the rank scan.
bool is_basis(const Matroid& m, const ElementSet& x, std::size_t full_rank);

// All bases, ordered by bitset encoding. Throws ResourceLimitError above cap.
std::vector<ElementSet> enumerate_bases(const Matroid& m,
                                        std::size_t cap = kDefaultExhaustiveCap);

// Every subset with its oracle answer, indexed by mask.
std::vector<bool> independence_table(const Matroid& m,
                                     std::size_t cap = kDefaultExhaustiveCap);

struct AxiomCheck {
  std::string axiom;  // "I1", "I2", "I3", "B1", "B2"
  bool passed = true;
  // Witness sets on failure. For I2: x subset of independent y, x dependent.
  // For I3: independent x, y with |x| < |y| and no e in y - x keeping x + e
  // independent. For B2: bases x, y and `element` in x - y with no exchange.
  std::optional<ElementSet> x;
  std::optional<ElementSet> y;
  std::optional<std::size_t> element;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(const std::string& axiom) const;
};

// Exhaustive I1-I3 check. I3 is tested on pairs with |y| = |x| + 1, which
// together with I2 implies the general exchange axiom.
AxiomReport check_independence_axioms(const Matroid& m,
                                      std::size_t cap = kDefaultExhaustiveCap);

// B1-B2 check for an explicit family over one universe.
AxiomReport check_basis_axioms(const std::vector<ElementSet>& family);

// Distinct independence queries in first-query order. Repeated queries of
// the same set are recorded once. Safe under concurrent appends.
class QueryLog {
 public:
  struct Entry {
    ElementSet set;
    bool answer;
  };

  void record(const ElementSet& x, bool answer);

  std::size_t count() const;
  std::vector<ElementSet> distinct_queries() const;
  std::vector<Entry> entries() const;
  void clear();

 private:
  mutable std::mutex mu_;
  std::vector<Entry> entries_;
  std::unordered_set<ElementSet, ElementSetHash> seen_;
};

struct LoggedMatroid {
  Matroid matroid;
  std::shared_ptr<QueryLog> log;
};

// The returned matroid answers exactly as `m` and records every query.
LoggedMatroid with_query_log(const Matroid& m);

}  // namespace matkit

#endif  // MATKIT_MATROID_HPP_
