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
#include "matkit/instances.hpp"

#include <algorithm>

#include "matkit/errors.hpp"

namespace matkit {

bool ModularInstance::balanced() const {
  return matroid.size() == 2 * rank(matroid);
}

void ModularInstance::require_well_formed() const {
  if (modules.universe() != matroid.size()) {
    throw DomainError("module partition covers " +
                      std::to_string(modules.universe()) +
                      " elements but the ground set has " +
                      std::to_string(matroid.size()));
  }
}

void CommonBasesInstance::require_well_formed() const {
  if (first.size() != second.size()) {
    throw DomainError("common bases need a shared ground set");
  }
  if (k < 1) throw DomainError("k must be at least 1");
}

void ParityInstance::require_well_formed() const {
  as_modular().require_well_formed();
  if (!pairs.all_blocks_have_size(2)) {
    throw DomainError("every module of a parity instance is a pair");
  }
}

CnfFormula normalize(const CnfFormula& formula, NormalizationReport* report) {
  NormalizationReport local;
  CnfFormula out;
  out.variables = formula.variables;
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& clause = formula.clauses[c];
    if (clause.empty()) {
      throw DomainError("clause " + std::to_string(c + 1) + " is empty");
    }
    std::vector<Literal> kept;
    bool tautology = false;
    for (const Literal& lit : clause) {
      if (lit.var >= formula.variables) {
        throw DomainError("clause " + std::to_string(c + 1) +
                          " uses variable " + std::to_string(lit.var + 1) +
                          " beyond the declared " +
                          std::to_string(formula.variables));
      }
      if (std::find(kept.begin(), kept.end(), lit) != kept.end()) {
        ++local.removed_duplicate_literals;
        continue;
      }
      if (std::find(kept.begin(), kept.end(), Literal{lit.var, !lit.positive}) !=
          kept.end()) {
        tautology = true;
      }
      kept.push_back(lit);
    }
    if (tautology) {
      ++local.dropped_tautologies;
      local.warnings.push_back("clause " + std::to_string(c + 1) +
                               " contains a variable and its negation; "
                               "dropped");
      continue;
    }
    if (kept.size() == 1) {
      throw DomainError("clause " + std::to_string(c + 1) +
                        " has a single literal and can never be "
                        "not-all-equal");
    }
    out.clauses.push_back(std::move(kept));
  }
  if (report) *report = std::move(local);
  return out;
}

bool is_normalized(const CnfFormula& formula) {
  for (const auto& clause : formula.clauses) {
    if (clause.size() < 2) return false;
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (clause[i].var >= formula.variables) return false;
      for (std::size_t j = i + 1; j < clause.size(); ++j) {
        if (clause[i].var == clause[j].var) return false;
      }
    }
  }
  return true;
}

bool nae_satisfies(const CnfFormula& formula, const std::vector<bool>& values) {
  if (values.size() != formula.variables) return false;
  for (const auto& clause : formula.clauses) {
    bool seen_true = false, seen_false = false;
    for (const Literal& lit : clause) {
      const bool v = values[lit.var] == lit.positive;
      seen_true = seen_true || v;
      seen_false = seen_false || !v;
    }
    if (!seen_true || !seen_false) return false;
  }
  return true;
}

std::string to_string(const Literal& lit) {
  return (lit.positive ? "x" : "~x") + std::to_string(lit.var + 1);
}

std::string to_string(const CnfFormula& formula) {
  std::string out;
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    if (c) out += " & ";
    out += "(";
    for (std::size_t i = 0; i < formula.clauses[c].size(); ++i) {
      if (i) out += " | ";
      out += to_string(formula.clauses[c][i]);
    }
    out += ")";
  }
  return out.empty() ? "true" : out;
}

}  // namespace matkit
