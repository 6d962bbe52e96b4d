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
#ifndef MATKIT_SERIALIZATION_HPP_
#define MATKIT_SERIALIZATION_HPP_

// JSON exchange for matroids, instances and certificates, plus
// problem-level dispatch for solving and verifying.
//
// Instances: {"schema": "matkit.instance.v1", "problem": <name>, ...}
// Certificates: {"schema": "matkit.certificate.v1", "problem": <name>,
//                "answer": "YES" | "NO", ...}

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "matkit/certificates.hpp"
#include "matkit/graphs.hpp"
#include "matkit/instances.hpp"
#include "matkit/matroid.hpp"
#include "matkit/solvers.hpp"

namespace matkit {

inline constexpr const char* kInstanceSchema = "matkit.instance.v1";
inline constexpr const char* kCertificateSchema = "matkit.certificate.v1";

enum class Problem {
  kCommonBases,
  kModularBases,
  kParityBases,
  kModularTrees,
  kNaeSat,
  kPerfectEvenFactor,
  kC4k2TwoFactor,
};

std::string problem_name(Problem p);
// Throws ParseError on an unknown name.
Problem problem_from_name(const std::string& name);
std::vector<std::string> problem_names();

struct ModularTreesInstance {
  MultiGraph graph;
  PartitionOfGroundSet modules;
};

using Instance =
    std::variant<CommonBasesInstance, ModularInstance, ParityInstance,
                 ModularTreesInstance, CnfFormula, Digraph, BipartiteGraph>;

Problem problem_of(const Instance& inst);

using CertificateValue =
    std::variant<CommonBasesCertificate, Bipartition, std::vector<bool>,
                 std::vector<std::size_t>>;

struct Certificate {
  Problem problem;
  CertificateValue value;
};

// Matroid descriptor trees, as produced by Matroid::to_json().
Matroid matroid_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const PartitionOfGroundSet& p);
PartitionOfGroundSet partition_from_json(const nlohmann::json& j,
                                         std::size_t universe);

nlohmann::json formula_to_json(const CnfFormula& f);
CnfFormula formula_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);
// Throws ParseError naming the offending field.
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert, const Instance& inst);
nlohmann::json no_certificate_json(Problem problem, const std::string& reason);
Certificate certificate_from_json(const nlohmann::json& j, const Instance& inst);

Verdict verify_certificate(const Instance& inst, const Certificate& cert);
std::optional<Certificate> solve_instance(const Instance& inst,
                                          const SolveOptions& options = {});

}  // namespace matkit

#endif  // MATKIT_SERIALIZATION_HPP_
