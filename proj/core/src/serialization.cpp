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
#include "matkit/serialization.hpp"

#include <algorithm>

#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"
#include "matkit/field.hpp"

namespace matkit {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"", 0, key);
  }
  return j.at(key);
}

template <typename T>
T get(const nlohmann::json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value: ") + e.what(), 0, key);
  }
}

ElementSet set_from_json(const nlohmann::json& j, std::size_t universe,
                         const char* key) {
  std::vector<std::size_t> members;
  try {
    members = j.get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("expected an index list: ") + e.what(), 0, key);
  }
  for (std::size_t e : members) {
    if (e >= universe) {
      throw ParseError("element " + std::to_string(e) + " outside universe of " +
                           std::to_string(universe),
                       0, key);
    }
  }
  return ElementSet(universe, members);
}

std::vector<ElementSet> sets_from_json(const nlohmann::json& j,
                                       std::size_t universe, const char* key) {
  if (!j.is_array()) throw ParseError("expected a list of sets", 0, key);
  std::vector<ElementSet> out;
  for (const auto& s : j) out.push_back(set_from_json(s, universe, key));
  return out;
}

nlohmann::json labelled(const ElementSet& s, const GroundSet& ground) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t e) { out.push_back(ground.label(e)); });
  return out;
}

// Rewrites precondition failures met while building as format errors.
template <typename F>
auto building(const char* what, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, what);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, what);
  }
}

const GroundSet& ground_of(const Instance& inst, std::size_t* size) {
  static const GroundSet kNone;
  *size = 0;
  return std::visit(
      [&](const auto& x) -> const GroundSet& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommonBasesInstance>) {
          *size = x.first.size();
          return x.first.ground();
        } else if constexpr (std::is_same_v<T, ModularInstance> ||
                             std::is_same_v<T, ParityInstance>) {
          *size = x.matroid.size();
          return x.matroid.ground();
        } else {
          return kNone;
        }
      },
      inst);
}

}  // namespace

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::kCommonBases: return "common-bases";
    case Problem::kModularBases: return "modular-bases";
    case Problem::kParityBases: return "parity-bases";
    case Problem::kModularTrees: return "modular-trees";
    case Problem::kNaeSat: return "naesat";
    case Problem::kPerfectEvenFactor: return "perfect-even-factor";
    case Problem::kC4k2TwoFactor: return "c4k2-two-factor";
  }
  return "unknown";
}

std::vector<std::string> problem_names() {
  return {"common-bases",  "modular-bases", "parity-bases",
          "modular-trees", "naesat",        "perfect-even-factor",
          "c4k2-two-factor"};
}

Problem problem_from_name(const std::string& name) {
  for (Problem p : {Problem::kCommonBases, Problem::kModularBases,
                    Problem::kParityBases, Problem::kModularTrees,
                    Problem::kNaeSat, Problem::kPerfectEvenFactor,
                    Problem::kC4k2TwoFactor}) {
    if (problem_name(p) == name) return p;
  }
  throw ParseError("unknown problem \"" + name + "\"", 0, "problem");
}

Problem problem_of(const Instance& inst) {
  static constexpr Problem kByIndex[] = {
      Problem::kCommonBases,  Problem::kModularBases, Problem::kParityBases,
      Problem::kModularTrees, Problem::kNaeSat,       Problem::kPerfectEvenFactor,
      Problem::kC4k2TwoFactor};
  return kByIndex[inst.index()];
}

Matroid matroid_from_json(const nlohmann::json& j) {
  const std::string kind = get<std::string>(j, "kind");
  Matroid m = building("matroid", [&]() -> Matroid {
    if (kind == "free") return free_matroid(GroundSet(get<std::size_t>(j, "n")));
    if (kind == "uniform") {
      return uniform_matroid(GroundSet(get<std::size_t>(j, "n")),
                             get<std::size_t>(j, "r"));
    }
    if (kind == "partition") {
      const std::size_t n = get<std::size_t>(j, "n");
      return partition_matroid(partition_from_json(field(j, "blocks"), n),
                               get<std::vector<std::size_t>>(j, "caps"));
    }
    if (kind == "graphic") return graphic_matroid(multigraph_from_json(field(j, "graph")));
    if (kind == "transversal") {
      return transversal_matroid(bipartite_from_json(field(j, "graph")));
    }
    if (kind == "paving") {
      const std::size_t n = get<std::size_t>(j, "n");
      return paving_matroid(HyperplaneFamily{
          GroundSet(n), get<std::size_t>(j, "r"),
          sets_from_json(field(j, "hyperplanes"), n, "hyperplanes")});
    }
    if (kind == "linear") return linear_matroid(matrix_from_json(field(j, "matrix")));
    if (kind == "family") {
      const std::size_t n = get<std::size_t>(j, "n");
      return set_family_matroid(
          GroundSet(n), sets_from_json(field(j, "independent"), n, "independent"));
    }
    if (kind == "direct_sum") {
      std::vector<Matroid> parts;
      for (const auto& p : field(j, "parts")) parts.push_back(matroid_from_json(p));
      return direct_sum(parts);
    }
    if (kind == "truncate") {
      return truncate(matroid_from_json(field(j, "of")), get<std::size_t>(j, "k"));
    }
    if (kind == "dual") return dual(matroid_from_json(field(j, "of")));
    if (kind == "parallel_copies") {
      return parallel_copies(matroid_from_json(field(j, "of")),
                             get<std::size_t>(j, "k"));
    }
    if (kind == "permute") {
      return permute_ground(matroid_from_json(field(j, "of")),
                            get<std::vector<std::size_t>>(j, "order"));
    }
    throw ParseError("unknown matroid kind \"" + kind + "\"", 0, "kind");
  });
  if (j.contains("labels")) {
    m = building("labels", [&] {
      return m.with_labels(get<std::vector<std::string>>(j, "labels"));
    });
  }
  return m;
}

nlohmann::json partition_to_json(const PartitionOfGroundSet& p) {
  return p.as_lists();
}

PartitionOfGroundSet partition_from_json(const nlohmann::json& j,
                                         std::size_t universe) {
  return building("modules", [&] {
    return PartitionOfGroundSet(
        universe, j.get<std::vector<std::vector<std::size_t>>>());
  });
}

nlohmann::json formula_to_json(const CnfFormula& f) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& c : f.clauses) {
    std::vector<long long> lits;
    for (const Literal& l : c) {
      const long long v = static_cast<long long>(l.var) + 1;
      lits.push_back(l.positive ? v : -v);
    }
    clauses.push_back(lits);
  }
  return {{"variables", f.variables}, {"clauses", clauses}};
}

CnfFormula formula_from_json(const nlohmann::json& j) {
  CnfFormula f;
  f.variables = get<std::size_t>(j, "variables");
  for (const auto& c : get<std::vector<std::vector<long long>>>(j, "clauses")) {
    std::vector<Literal> clause;
    for (long long v : c) {
      if (v == 0) throw ParseError("literal 0 inside a clause", 0, "clauses");
      clause.push_back({static_cast<std::size_t>((v < 0 ? -v : v) - 1), v > 0});
    }
    f.clauses.push_back(clause);
  }
  return building("clauses", [&] { return normalize(f); });
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j = {{"schema", kInstanceSchema},
                      {"problem", problem_name(problem_of(inst))}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommonBasesInstance>) {
          j["first"] = x.first.to_json();
          j["second"] = x.second.to_json();
          j["k"] = x.k;
        } else if constexpr (std::is_same_v<T, ModularInstance>) {
          j["matroid"] = x.matroid.to_json();
          j["modules"] = partition_to_json(x.modules);
        } else if constexpr (std::is_same_v<T, ParityInstance>) {
          j["matroid"] = x.matroid.to_json();
          j["pairs"] = partition_to_json(x.pairs);
        } else if constexpr (std::is_same_v<T, ModularTreesInstance>) {
          j["graph"] = to_json(x.graph);
          j["modules"] = partition_to_json(x.modules);
        } else if constexpr (std::is_same_v<T, CnfFormula>) {
          j["formula"] = formula_to_json(x);
        } else if constexpr (std::is_same_v<T, Digraph>) {
          j["digraph"] = to_json(x);
        } else {
          j["graph"] = to_json(x);
        }
      },
      inst);
  return j;
}

Instance instance_from_json(const nlohmann::json& j) {
  if (get<std::string>(j, "schema") != kInstanceSchema) {
    throw ParseError(std::string("expected schema ") + kInstanceSchema, 0,
                     "schema");
  }
  switch (problem_from_name(get<std::string>(j, "problem"))) {
    case Problem::kCommonBases: {
      CommonBasesInstance inst{matroid_from_json(field(j, "first")),
                               matroid_from_json(field(j, "second")),
                               j.contains("k") ? get<std::size_t>(j, "k") : 2};
      building("k", [&] {
        inst.require_well_formed();
        return 0;
      });
      return inst;
    }
    case Problem::kModularBases: {
      Matroid m = matroid_from_json(field(j, "matroid"));
      return ModularInstance{m, partition_from_json(field(j, "modules"), m.size())};
    }
    case Problem::kParityBases: {
      Matroid m = matroid_from_json(field(j, "matroid"));
      ParityInstance inst{m, partition_from_json(field(j, "pairs"), m.size())};
      building("pairs", [&] {
        inst.require_well_formed();
        return 0;
      });
      return inst;
    }
    case Problem::kModularTrees: {
      MultiGraph g = multigraph_from_json(field(j, "graph"));
      return ModularTreesInstance{
          g, partition_from_json(field(j, "modules"), g.edge_count())};
    }
    case Problem::kNaeSat:
      return formula_from_json(field(j, "formula"));
    case Problem::kPerfectEvenFactor:
      return digraph_from_json(field(j, "digraph"));
    case Problem::kC4k2TwoFactor:
      return bipartite_from_json(field(j, "graph"));
  }
  throw ParseError("unreachable problem", 0, "problem");
}

nlohmann::json no_certificate_json(Problem problem, const std::string& reason) {
  return {{"schema", kCertificateSchema},
          {"problem", problem_name(problem)},
          {"answer", "NO"},
          {"reason", reason}};
}

nlohmann::json certificate_to_json(const Certificate& cert, const Instance& inst) {
  nlohmann::json j = {{"schema", kCertificateSchema},
                      {"problem", problem_name(cert.problem)},
                      {"answer", "YES"}};
  std::size_t n = 0;
  const GroundSet& ground = ground_of(inst, &n);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CommonBasesCertificate>) {
          nlohmann::json classes = nlohmann::json::array(), labels = classes;
          for (const auto& c : v.classes) {
            classes.push_back(c.elements());
            labels.push_back(labelled(c, ground));
          }
          j["classes"] = classes;
          j["class_labels"] = labels;
        } else if constexpr (std::is_same_v<T, Bipartition>) {
          j["classes"] = nlohmann::json::array({v.first.elements(), v.second.elements()});
          if (const auto* trees = std::get_if<ModularTreesInstance>(&inst)) {
            const GroundSet edges(trees->graph.edge_labels());
            j["class_labels"] =
                nlohmann::json::array({labelled(v.first, edges), labelled(v.second, edges)});
          } else {
            j["class_labels"] =
                nlohmann::json::array({labelled(v.first, ground), labelled(v.second, ground)});
          }
        } else if constexpr (std::is_same_v<T, std::vector<bool>>) {
          j["assignment"] = v;
          std::vector<std::size_t> true_vars;
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i]) true_vars.push_back(i + 1);
          }
          j["true_variables"] = true_vars;
        } else {
          if (cert.problem == Problem::kPerfectEvenFactor) {
            const auto& d = std::get<Digraph>(inst);
            j["arcs"] = v;
            nlohmann::json list = nlohmann::json::array();
            for (std::size_t a : v) list.push_back({d.arcs()[a].first, d.arcs()[a].second});
            j["arc_list"] = list;
          } else {
            const auto& g = std::get<BipartiteGraph>(inst);
            j["edges"] = v;
            nlohmann::json list = nlohmann::json::array();
            for (std::size_t e : v) list.push_back({g.edges()[e].first, g.edges()[e].second});
            j["edge_list"] = list;
          }
        }
      },
      cert.value);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j, const Instance& inst) {
  if (get<std::string>(j, "schema") != kCertificateSchema) {
    throw ParseError(std::string("expected schema ") + kCertificateSchema, 0,
                     "schema");
  }
  const Problem problem = problem_from_name(get<std::string>(j, "problem"));
  if (problem != problem_of(inst)) {
    throw ParseError("certificate is for " + problem_name(problem) +
                         " but the instance is " + problem_name(problem_of(inst)),
                     0, "problem");
  }
  if (get<std::string>(j, "answer") != "YES") {
    throw ParseError("only YES certificates can be verified", 0, "answer");
  }
  std::size_t n = 0;
  ground_of(inst, &n);
  switch (problem) {
    case Problem::kCommonBases:
      return {problem, CommonBasesCertificate{
                           sets_from_json(field(j, "classes"), n, "classes")}};
    case Problem::kModularBases:
    case Problem::kParityBases:
    case Problem::kModularTrees: {
      if (problem == Problem::kModularTrees) {
        n = std::get<ModularTreesInstance>(inst).graph.edge_count();
      }
      auto sets = sets_from_json(field(j, "classes"), n, "classes");
      if (sets.size() != 2) throw ParseError("expected two classes", 0, "classes");
      return {problem, Bipartition{sets[0], sets[1]}};
    }
    case Problem::kNaeSat:
      return {problem, get<std::vector<bool>>(j, "assignment")};
    case Problem::kPerfectEvenFactor:
      return {problem, get<std::vector<std::size_t>>(j, "arcs")};
    case Problem::kC4k2TwoFactor:
      return {problem, get<std::vector<std::size_t>>(j, "edges")};
  }
  throw ParseError("unreachable problem", 0, "problem");
}

Verdict verify_certificate(const Instance& inst, const Certificate& cert) {
  if (cert.problem != problem_of(inst)) return Verdict::no("problem mismatch");
  try {
    return std::visit(
        [&](const auto& x) -> Verdict {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, CommonBasesInstance>) {
            return verify_common_bases(x, std::get<CommonBasesCertificate>(cert.value));
          } else if constexpr (std::is_same_v<T, ModularInstance>) {
            return verify_modular_bases(x, std::get<Bipartition>(cert.value));
          } else if constexpr (std::is_same_v<T, ParityInstance>) {
            return verify_parity_bases(x, std::get<Bipartition>(cert.value));
          } else if constexpr (std::is_same_v<T, ModularTreesInstance>) {
            return verify_modular_trees(x.graph, x.modules,
                                        std::get<Bipartition>(cert.value));
          } else if constexpr (std::is_same_v<T, CnfFormula>) {
            return verify_nae_assignment(x, std::get<std::vector<bool>>(cert.value));
          } else if constexpr (std::is_same_v<T, Digraph>) {
            return verify_perfect_even_factor(
                x, std::get<std::vector<std::size_t>>(cert.value));
          } else {
            return verify_c4k2_two_factor(
                x, std::get<std::vector<std::size_t>>(cert.value));
          }
        },
        inst);
  } catch (const std::bad_variant_access&) {
    return Verdict::no("certificate has the wrong shape for the problem");
  } catch (const DomainError& e) {
    return Verdict::no(e.what());
  }
}

std::optional<Certificate> solve_instance(const Instance& inst,
                                          const SolveOptions& options) {
  const Problem p = problem_of(inst);
  auto wrap = [p](auto opt) -> std::optional<Certificate> {
    if (!opt) return std::nullopt;
    return Certificate{p, CertificateValue(*opt)};
  };
  return std::visit(
      [&](const auto& x) -> std::optional<Certificate> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommonBasesInstance>) {
          return wrap(solve_common_bases(x, options));
        } else if constexpr (std::is_same_v<T, ModularInstance>) {
          return wrap(solve_modular_bases(x, options));
        } else if constexpr (std::is_same_v<T, ParityInstance>) {
          return wrap(solve_parity_bases(x, options));
        } else if constexpr (std::is_same_v<T, ModularTreesInstance>) {
          return wrap(solve_modular_trees(x.graph, x.modules, options));
        } else if constexpr (std::is_same_v<T, CnfFormula>) {
          return wrap(solve_naesat(x, options));
        } else if constexpr (std::is_same_v<T, Digraph>) {
          return wrap(solve_perfect_even_factor(x, options));
        } else {
          return wrap(solve_c4k2_two_factor(x, options));
        }
      },
      inst);
}

}  // namespace matkit
