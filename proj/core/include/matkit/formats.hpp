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
#ifndef MATKIT_FORMATS_HPP_
#define MATKIT_FORMATS_HPP_

// Plain-text exchange formats.
//
// DIMACS CNF: "c" comment lines, one "p cnf <vars> <clauses>" header, then
// clauses as signed 1-based literals terminated by 0. Clauses are read with
// not-all-equal semantics. Unit clauses are rejected and tautologies dropped
// with a warning.
//
// Arc list: a vertex count line, then one "u v" line per arc (0-indexed).
// Bipartite list: an "nS nT" line, then one "s t" line per edge.
// Blank lines and lines starting with '#' are skipped in both list formats.

#include <istream>
#include <ostream>

#include "matkit/graphs.hpp"
#include "matkit/instances.hpp"

namespace matkit {

// Throws ParseError with the offending line number.
CnfFormula parse_dimacs(std::istream& in, NormalizationReport* report = nullptr);
void write_dimacs(std::ostream& out, const CnfFormula& formula);

// Rejects self-loops and repeated arcs.
Digraph parse_arc_list(std::istream& in);
void write_arc_list(std::ostream& out, const Digraph& d);

// Rejects repeated edges.
BipartiteGraph parse_bipartite_list(std::istream& in);
void write_bipartite_list(std::ostream& out, const BipartiteGraph& g);

}  // namespace matkit

#endif  // MATKIT_FORMATS_HPP_
