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
#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <algorithm>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matkit/adversary.hpp"
#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"
#include "matkit/formats.hpp"
#include "matkit/gadget.hpp"
#include "matkit/reductions.hpp"
#include "matkit/serialization.hpp"

namespace matkit::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::size_t threads = 0;
  std::optional<std::size_t> cap;

  SolveOptions solve_options() const {
    SolveOptions o;
    o.threads = threads;
    o.cap = cap;
    return o;
  }
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

// Guesses the text format from the first meaningful line: a "p cnf"
// header, a lone vertex count, or an "nS nT" pair.
std::optional<Problem> sniff_text_format(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == '#' || first == "c") continue;
    if (first == "p") return Problem::kNaeSat;
    std::size_t count = 1;
    for (std::string more; tokens >> more;) ++count;
    if (count == 1) return Problem::kPerfectEvenFactor;
    if (count == 2) return Problem::kC4k2TwoFactor;
    return std::nullopt;
  }
  return std::nullopt;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line =
        1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(e.what(), line);
  }
}

// A loaded instance plus the JSON it came from (null for text formats).
struct Loaded {
  Instance instance;
  json source;
};

Loaded load_instance(const std::string& text, std::optional<Problem> hint) {
  if (looks_like_json(text)) {
    json j = parse_json(text);
    return {instance_from_json(j), j};
  }
  std::istringstream ss(text);
  if (hint == Problem::kNaeSat) return {parse_dimacs(ss), json()};
  if (hint == Problem::kPerfectEvenFactor) return {parse_arc_list(ss), json()};
  if (hint == Problem::kC4k2TwoFactor) return {parse_bipartite_list(ss), json()};
  throw ParseError(
      "expected a JSON instance (text input needs --problem naesat, "
      "perfect-even-factor or c4k2-two-factor)");
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Rebuilds the modular-to-common reduction recorded in an instance, when
// the recorded output still matches the instance.
std::optional<ModularToCommonResult> recorded_r1(const json& j,
                                                 const Instance& inst) {
  if (!j.is_object() || !j.contains("reduction")) return std::nullopt;
  const json& r = j.at("reduction");
  if (r.value("rule", "") != "r1" || !r.contains("source")) return std::nullopt;
  const Instance source = instance_from_json(r.at("source"));
  const auto* modular = std::get_if<ModularInstance>(&source);
  if (modular == nullptr) return std::nullopt;
  GadgetBlockLabeling labeling = certified_labeling();
  if (r.contains("labeling")) labeling = labeling_from_json(r.at("labeling"));
  ModularToCommonResult rebuilt = reduce_modular_to_common(*modular, labeling);
  if (instance_to_json(Instance(rebuilt.instance)) != instance_to_json(inst)) {
    return std::nullopt;
  }
  return rebuilt;
}

std::optional<Certificate> solve_loaded(const Loaded& loaded,
                                        const SolveOptions& options) {
  if (auto r1 = recorded_r1(loaded.source, loaded.instance)) {
    auto cert = solve_modular_to_common_output(*r1, options);
    if (!cert) return std::nullopt;
    return Certificate{Problem::kCommonBases, *cert};
  }
  return solve_instance(loaded.instance, options);
}

int cmd_build(const std::string& path, const std::string& format,
              std::istream& in, std::ostream& out) {
  const std::string text = read_text(path, in);
  std::optional<Problem> hint;
  if (format == "dimacs") hint = Problem::kNaeSat;
  if (format == "arcs") hint = Problem::kPerfectEvenFactor;
  if (format == "bipartite") hint = Problem::kC4k2TwoFactor;
  if (format == "auto" && !looks_like_json(text)) hint = sniff_text_format(text);
  if (looks_like_json(text)) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("kind")) {
      const Matroid m = matroid_from_json(j);
      print(out, {{"matroid", m.to_json()}, {"size", m.size()}, {"rank", rank(m)}});
      return kExitYes;
    }
  }
  print(out, instance_to_json(load_instance(text, hint).instance));
  return kExitYes;
}

json reduction_block(const std::string& rule, const Instance& source,
                     const std::vector<std::string>& provenance) {
  return {{"rule", rule}, {"source", instance_to_json(source)}, {"provenance", provenance}};
}

int cmd_reduce(const std::string& rule, const std::string& path, std::istream& in,
               std::ostream& out) {
  const std::string text = read_text(path, in);
  std::optional<Problem> hint;
  if (rule == "r2") hint = Problem::kNaeSat;
  if (rule == "r3") hint = Problem::kPerfectEvenFactor;
  if (rule == "r4") hint = Problem::kC4k2TwoFactor;
  const Loaded loaded = load_instance(text, hint);
  auto expect = [&](Problem p) {
    if (problem_of(loaded.instance) != p) {
      throw ParseError("rule " + rule + " expects a " + problem_name(p) +
                           " instance, got " + problem_name(problem_of(loaded.instance)),
                       0, "problem");
    }
  };
  json result;
  if (rule == "r1") {
    expect(Problem::kModularBases);
    const auto r = reduce_modular_to_common(std::get<ModularInstance>(loaded.instance));
    result = instance_to_json(Instance(r.instance));
    result["reduction"] = reduction_block(rule, Instance(r.source), r.provenance);
    result["reduction"]["labeling"] = labeling_to_json(r.labeling);
    result["reduction"]["gadget_offset"] = r.gadget_offset;
  } else if (rule == "r2") {
    expect(Problem::kNaeSat);
    const auto r = reduce_naesat_to_modular_trees(std::get<CnfFormula>(loaded.instance));
    result = instance_to_json(Instance(ModularTreesInstance{r.graph, r.modules}));
    result["reduction"] = reduction_block(rule, Instance(r.formula), r.provenance);
  } else if (rule == "r3") {
    expect(Problem::kPerfectEvenFactor);
    const auto r = reduce_even_factor_to_two_factor(std::get<Digraph>(loaded.instance));
    result = instance_to_json(Instance(r.graph));
    result["reduction"] = reduction_block(rule, Instance(r.source), r.provenance);
  } else if (rule == "r4") {
    expect(Problem::kC4k2TwoFactor);
    const auto r = reduce_two_factor_to_parity(std::get<BipartiteGraph>(loaded.instance));
    if (!r.instance) {
      print(out, no_certificate_json(Problem::kC4k2TwoFactor,
                                     "sides differ in size, so no 2-factor exists"));
      return kExitNo;
    }
    result = instance_to_json(Instance(*r.instance));
    result["reduction"] = reduction_block(rule, Instance(r.source), r.provenance);
  } else if (rule == "r5") {
    expect(Problem::kCommonBases);
    const auto r =
        reduce_to_partition_matroid_case(std::get<CommonBasesInstance>(loaded.instance));
    result = instance_to_json(Instance(r.instance));
    result["reduction"] = reduction_block(rule, Instance(r.source), r.provenance);
  } else {
    throw ParseError("unknown rule '" + rule + "'", 0, "rule");
  }
  print(out, result);
  return kExitYes;
}

int cmd_solve(const std::string& problem, const std::string& path,
              const Globals& g, std::istream& in, std::ostream& out) {
  std::optional<Problem> hint;
  if (!problem.empty()) hint = problem_from_name(problem);
  const Loaded loaded = load_instance(read_text(path, in), hint);
  const Problem actual = problem_of(loaded.instance);
  if (hint && *hint != actual) {
    throw ParseError("instance is " + problem_name(actual) + ", not " + problem, 0,
                     "problem");
  }
  const auto cert = solve_loaded(loaded, g.solve_options());
  if (!cert) {
    print(out, no_certificate_json(actual, "exhaustive search found no certificate"));
    return kExitNo;
  }
  const Verdict v = verify_certificate(loaded.instance, *cert);
  if (!v) throw Error("solver returned a certificate that fails: " + v.reason);
  print(out, certificate_to_json(*cert, loaded.instance));
  return kExitYes;
}

int cmd_verify(const std::string& instance_path, const std::string& cert_path,
               const std::string& problem, const Globals& g, std::istream& in,
               std::ostream& out) {
  if ((instance_path.empty() || instance_path == "-") &&
      (cert_path.empty() || cert_path == "-")) {
    throw ParseError("at most one of instance and certificate may come from stdin");
  }
  std::optional<Problem> hint;
  if (!problem.empty()) hint = problem_from_name(problem);
  const Loaded loaded = load_instance(read_text(instance_path, in), hint);
  const json cj = parse_json(read_text(cert_path, in));
  json report;
  bool ok = false;
  if (cj.value("answer", "") == "NO") {
    // A NO answer has no witness; confirm it by exhaustive search.
    const auto found = solve_loaded(loaded, g.solve_options());
    ok = !found;
    report = {{"valid", ok},
              {"reason", ok ? "exhaustive search confirms NO"
                            : "instance has a certificate; NO is wrong"}};
  } else {
    const Verdict v = verify_certificate(loaded.instance,
                                         certificate_from_json(cj, loaded.instance));
    ok = v.ok;
    report = {{"valid", v.ok}, {"reason", v.reason}};
  }
  report["problem"] = problem_name(problem_of(loaded.instance));
  print(out, report);
  return ok ? kExitYes : kExitNo;
}

int cmd_gadget(const std::string& action, std::size_t ell,
               const std::string& labeling_path, const Globals& g,
               std::istream& in, std::ostream& out) {
  if (action == "search") {
    GadgetSearchStats stats;
    const GadgetBlockLabeling labeling = search_block_labeling(&stats, g.threads);
    json j = labeling_to_json(labeling);
    j["search"] = {{"first_graph_classes", stats.first_graph_classes},
                   {"second_graph_classes", stats.second_graph_classes},
                   {"candidates_tried", stats.candidates_tried}};
    print(out, j);
    return kExitYes;
  }
  GadgetBlockLabeling labeling = certified_labeling();
  if (!labeling_path.empty()) {
    labeling = labeling_from_json(parse_json(read_text(labeling_path, in)));
  }
  const GadgetPair pair = build_gadget(labeling, ell);
  const GadgetCertificate cert = verify_gadget(pair, g.threads, g.cap.value_or(27));
  print(out, certificate_to_json(cert, pair));
  return cert.passed() ? kExitYes : kExitNo;
}

int cmd_adversary(std::size_t t, const std::string& solver, const std::string& target,
                  std::ostream& out) {
  if (target != "blocked" && target != "planted") {
    throw ParseError("target must be 'blocked' or 'planted'", 0, "target");
  }
  const AdversaryPair pair = build_adversary(t);
  const AdversaryTarget which =
      target == "planted" ? AdversaryTarget::kPlanted : AdversaryTarget::kBlocked;
  const ExperimentReport report =
      run_indistinguishability(pair, named_query_solver(solver), which);
  json j = to_json(report);
  j["solver"] = solver;
  j["hidden"] = pair.hidden.elements();
  j["candidate_hidden_sets"] = count_parity_hiding_sets(t);
  print(out, j);
  const bool correct = report.answered_yes == (which == AdversaryTarget::kPlanted);
  return correct && report.agreement_verified ? kExitYes : kExitNo;
}

json set_or_null(const std::optional<ElementSet>& s) {
  return s ? json(s->elements()) : json(nullptr);
}

int cmd_axioms(const std::string& path, const Globals& g, std::istream& in,
               std::ostream& out) {
  const json j = parse_json(read_text(path, in));
  std::vector<std::pair<std::string, Matroid>> matroids;
  if (j.contains("kind")) {
    matroids.emplace_back("matroid", matroid_from_json(j));
  } else {
    const Instance inst = instance_from_json(j);
    if (const auto* c = std::get_if<CommonBasesInstance>(&inst)) {
      matroids.emplace_back("first", c->first);
      matroids.emplace_back("second", c->second);
    } else if (const auto* m = std::get_if<ModularInstance>(&inst)) {
      matroids.emplace_back("matroid", m->matroid);
    } else if (const auto* p = std::get_if<ParityInstance>(&inst)) {
      matroids.emplace_back("matroid", p->matroid);
    } else if (const auto* t = std::get_if<ModularTreesInstance>(&inst)) {
      matroids.emplace_back("matroid", graphic_matroid(t->graph));
    } else {
      throw ParseError("instance holds no matroid", 0, "problem");
    }
  }
  json reports = json::array();
  bool all = true;
  for (const auto& [name, m] : matroids) {
    const AxiomReport report =
        check_independence_axioms(m, g.cap.value_or(kDefaultExhaustiveCap));
    json checks = json::array();
    for (const AxiomCheck& c : report.checks) {
      json cj = {{"axiom", c.axiom}, {"passed", c.passed}};
      if (!c.passed) {
        cj["x"] = set_or_null(c.x);
        cj["y"] = set_or_null(c.y);
        cj["element"] = c.element ? json(*c.element) : json(nullptr);
        cj["detail"] = c.detail;
      }
      checks.push_back(cj);
    }
    all = all && report.all_passed();
    reports.push_back({{"name", name},
                       {"size", m.size()},
                       {"rank", rank(m)},
                       {"passed", report.all_passed()},
                       {"checks", checks}});
  }
  print(out, {{"passed", all}, {"matroids", reports}});
  return all ? kExitYes : kExitNo;
}

std::vector<std::size_t> highlight_of(const json& cj, const Instance& inst) {
  if (cj.is_null() || cj.value("answer", "") != "YES") return {};
  const Certificate cert = certificate_from_json(cj, inst);
  if (const auto* b = std::get_if<Bipartition>(&cert.value)) return b->first.elements();
  if (const auto* v = std::get_if<std::vector<std::size_t>>(&cert.value)) return *v;
  return {};
}

int cmd_emit_dot(const std::string& path, const std::string& cert_path,
                 std::optional<std::size_t> gadget_ell, std::istream& in,
                 std::ostream& out) {
  if (gadget_ell) {
    out << gadget_to_dot(build_gadget(certified_labeling(), *gadget_ell));
    return kExitYes;
  }
  const std::string text = read_text(path, in);
  const json j = parse_json(text);
  const Instance inst = instance_from_json(j);
  json cj;
  if (!cert_path.empty()) cj = parse_json(read_text(cert_path, in));
  const auto highlight = highlight_of(cj, inst);
  if (const auto* t = std::get_if<ModularTreesInstance>(&inst)) {
    out << to_dot(t->graph, "modular_trees", highlight);
  } else if (const auto* d = std::get_if<Digraph>(&inst)) {
    out << to_dot(*d, "digraph", highlight);
  } else if (const auto* b = std::get_if<BipartiteGraph>(&inst)) {
    out << to_dot(*b, "bipartite", highlight);
  } else if (const auto* f = std::get_if<CnfFormula>(&inst)) {
    const auto r = reduce_naesat_to_modular_trees(*f);
    out << to_dot(r.graph, "naesat_graph", highlight);
  } else {
    const json* descriptor = nullptr;
    if (j.contains("matroid")) descriptor = &j.at("matroid");
    if (j.contains("first")) descriptor = &j.at("first");
    if (descriptor && descriptor->value("kind", "") == "graphic") {
      out << to_dot(multigraph_from_json(descriptor->at("graph")), "graphic", highlight);
    } else if (descriptor && descriptor->value("kind", "") == "transversal") {
      out << to_dot(bipartite_from_json(descriptor->at("graph")), "transversal");
    } else {
      throw ParseError("instance has no graph to draw", 0, "problem");
    }
  }
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid partition toolkit: build, reduce, solve and verify"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::size_t cap = 0;
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  auto* cap_opt = app.add_option("--cap", cap, "Override the exhaustive-search size cap");

  std::string path, format = "auto", rule, problem, cert_path, labeling_path;
  std::string action, solver = "backtrack", target = "planted";
  std::size_t ell = 1, t = 1;

  auto* build = app.add_subcommand("build", "Validate and normalize an instance");
  build->add_option("input", path, "Instance file (default stdin)");
  build->add_option("--format", format, "auto, json, dimacs, arcs or bipartite")
      ->check(CLI::IsMember({"auto", "json", "dimacs", "arcs", "bipartite"}));

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction rule");
  reduce->add_option("--rule", rule, "r1, r2, r3, r4 or r5")
      ->required()
      ->check(CLI::IsMember({"r1", "r2", "r3", "r4", "r5"}));
  reduce->add_option("input", path, "Instance file (default stdin)");

  auto* solve = app.add_subcommand("solve", "Decide an instance exhaustively");
  solve->add_option("--problem", problem, "Problem name")
      ->check(CLI::IsMember(problem_names()));
  solve->add_option("input", path, "Instance file (default stdin)");

  auto* verify = app.add_subcommand("verify", "Check a certificate");
  verify->add_option("instance", path, "Instance file")->required();
  verify->add_option("certificate", cert_path, "Certificate file (default stdin)");
  verify->add_option("--problem", problem, "Problem name for text instances")
      ->check(CLI::IsMember(problem_names()));

  auto* gadget = app.add_subcommand("gadget", "Search or certify the block gadget");
  gadget->add_option("action", action, "search or verify")
      ->required()
      ->check(CLI::IsMember({"search", "verify"}));
  gadget->add_option("--ell", ell, "Number of chained blocks")->check(CLI::Range(1, 3));
  gadget->add_option("--labeling", labeling_path, "Block labeling JSON to verify");

  auto* adversary = app.add_subcommand("adversary", "Run the indistinguishability experiment");
  adversary->add_option("--t", t, "Half the number of pairs")->required()->check(CLI::Range(1, 6));
  adversary->add_option("--solver", solver, "backtrack, sweep or exhaustive");
  adversary->add_option("--target", target, "blocked or planted");

  auto* axioms = app.add_subcommand("axioms", "Check the independence axioms");
  axioms->add_option("input", path, "Matroid descriptor or instance (default stdin)");

  auto* dot = app.add_subcommand("emit-dot", "Render graphs and gadgets as DOT");
  dot->add_option("input", path, "Instance file (default stdin)");
  dot->add_option("--certificate", cert_path, "Certificate whose edges are drawn bold");
  std::size_t gadget_ell = 0;
  auto* gadget_opt = dot->add_option("--gadget", gadget_ell, "Draw the gadget with this many blocks")
                         ->check(CLI::Range(1, 3));

  std::vector<std::string> argv_store{"matkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }
  if (*cap_opt) g.cap = cap;

  try {
    if (*build) return cmd_build(path, format, in, out);
    if (*reduce) return cmd_reduce(rule, path, in, out);
    if (*solve) return cmd_solve(problem, path, g, in, out);
    if (*verify) return cmd_verify(path, cert_path, problem, g, in, out);
    if (*gadget) return cmd_gadget(action, ell, labeling_path, g, in, out);
    if (*adversary) return cmd_adversary(t, solver, target, out);
    if (*axioms) return cmd_axioms(path, g, in, out);
    if (*dot) {
      std::optional<std::size_t> which;
      if (*gadget_opt) which = gadget_ell;
      return cmd_emit_dot(path, cert_path, which, in, out);
    }
  } catch (const ResourceLimitError& e) {
    err << "matkit: resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "matkit: input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "matkit: precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "matkit: invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "matkit: input error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace matkit::cli
