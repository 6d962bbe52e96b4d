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
#include "matkit/formats.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matkit/errors.hpp"

namespace matkit {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Reads exactly `count` unsigned integers from a line and nothing else.
std::vector<std::size_t> read_numbers(const std::string& line, std::size_t count,
                                      std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<std::size_t> out;
  long long v = 0;
  while (ss >> v) {
    if (v < 0) throw ParseError("negative index " + std::to_string(v), line_no);
    out.push_back(static_cast<std::size_t>(v));
  }
  ss.clear();
  std::string rest;
  if (ss >> rest) throw ParseError("unexpected token '" + rest + "'", line_no);
  if (out.size() != count) {
    throw ParseError("expected " + std::to_string(count) + " integers, got " +
                         std::to_string(out.size()),
                     line_no);
  }
  return out;
}

template <typename Graph, typename Add>
void read_edges(std::istream& in, std::size_t& line_no, Graph& g, Add add) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto uv = read_numbers(line, 2, line_no);
    try {
      add(g, uv[0], uv[1]);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in, NormalizationReport* report) {
  CnfFormula f;
  std::size_t declared_clauses = 0;
  bool have_header = false;
  std::vector<Literal> current;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      if (have_header) throw ParseError("second problem line", line_no);
      std::string fmt;
      long long n = -1, m = -1;
      if (!(ss >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) {
        throw ParseError("expected 'p cnf <variables> <clauses>'", line_no);
      }
      f.variables = static_cast<std::size_t>(n);
      declared_clauses = static_cast<std::size_t>(m);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before the 'p cnf' line", line_no);
    ss.clear();
    ss.str(line);
    long long lit = 0;
    while (ss >> lit) {
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        std::set<Literal> distinct(current.begin(), current.end());
        if (distinct.size() == 1) {
          throw ParseError(
              "unit clause (never not-all-equal satisfiable; rejected)", line_no);
        }
        f.clauses.push_back(current);
        current.clear();
        continue;
      }
      const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > f.variables) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds " +
                             std::to_string(f.variables) + " variables",
                         line_no);
      }
      current.push_back({var - 1, lit > 0});
    }
    ss.clear();
    std::string rest;
    if (ss >> rest) throw ParseError("unexpected token '" + rest + "'", line_no);
  }
  if (!have_header) throw ParseError("missing 'p cnf' line", line_no);
  if (!current.empty()) throw ParseError("last clause lacks a terminating 0", line_no);
  if (f.clauses.size() != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()),
                     line_no);
  }
  try {
    return normalize(f, report);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no);
  }
}

void write_dimacs(std::ostream& out, const CnfFormula& formula) {
  out << "p cnf " << formula.variables << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (const Literal& l : clause) {
      out << (l.positive ? "" : "-") << l.var + 1 << ' ';
    }
    out << "0\n";
  }
}

Digraph parse_arc_list(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    Digraph d(read_numbers(line, 1, line_no)[0]);
    read_edges(in, line_no, d, [](Digraph& g, std::size_t u, std::size_t v) {
      g.add_arc(u, v);
    });
    return d;
  }
  throw ParseError("missing vertex count line", line_no);
}

void write_arc_list(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

BipartiteGraph parse_bipartite_list(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto sizes = read_numbers(line, 2, line_no);
    BipartiteGraph g(sizes[0], sizes[1]);
    read_edges(in, line_no, g, [](BipartiteGraph& b, std::size_t s, std::size_t t) {
      b.add_edge(s, t);
    });
    return g;
  }
  throw ParseError("missing 'nS nT' line", line_no);
}

void write_bipartite_list(std::ostream& out, const BipartiteGraph& g) {
  out << g.left_size() << ' ' << g.right_size() << '\n';
  for (const auto& [s, t] : g.edges()) out << s << ' ' << t << '\n';
}

}  // namespace matkit
