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
#ifndef MATKIT_INSTANCES_HPP_
#define MATKIT_INSTANCES_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "matkit/constructions.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

// Split the ground set into two bases that are unions of modules.
struct ModularInstance {
  Matroid matroid;
  PartitionOfGroundSet modules;

  // |S| = 2 rank(S). Solvers answer NO when this fails; reductions that
  // need it throw PreconditionError.
  bool balanced() const;
  void require_well_formed() const;  // module universe matches the ground set
};

// Split the ground set into k sets that are bases of both matroids.
struct CommonBasesInstance {
  Matroid first;
  Matroid second;
  std::size_t k = 2;

  void require_well_formed() const;  // common ground size, k >= 1
};

// Modular instance whose modules all have size two.
struct ParityInstance {
  Matroid matroid;
  PartitionOfGroundSet pairs;

  void require_well_formed() const;
  ModularInstance as_modular() const { return {matroid, pairs}; }
};

struct Literal {
  std::size_t var = 0;  // 0-based; printed as x_{var+1}
  bool positive = true;
  auto operator<=>(const Literal&) const = default;
};

// Clauses are read with not-all-equal semantics.
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::vector<Literal>> clauses;
  bool operator==(const CnfFormula&) const = default;
};

struct NormalizationReport {
  std::size_t dropped_tautologies = 0;
  std::size_t removed_duplicate_literals = 0;
  std::vector<std::string> warnings;
};

// Removes repeated literals (keeping first occurrences) and drops clauses
// holding a variable in both polarities, which can never be all-equal.
// Throws DomainError on an empty clause, a clause left with one literal, or
// a variable index out of range.
CnfFormula normalize(const CnfFormula& formula,
                     NormalizationReport* report = nullptr);
bool is_normalized(const CnfFormula& formula);

// True iff every clause has a true and a false literal.
bool nae_satisfies(const CnfFormula& formula, const std::vector<bool>& values);

std::string to_string(const Literal& lit);
std::string to_string(const CnfFormula& formula);

}  // namespace matkit

#endif  // MATKIT_INSTANCES_HPP_
