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
#ifndef MATKIT_GRAPHS_HPP_
#define MATKIT_GRAPHS_HPP_

#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "matkit/element_set.hpp"

namespace matkit {

// Undirected multigraph with labeled edges. Parallel edges and self-loops
// are allowed; edge labels are unique.
class MultiGraph {
 public:
  struct Edge {
    std::size_t u;
    std::size_t v;
    std::string label;
  };

  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  // Empty label means "e<index>". Returns the edge index.
  std::size_t add_edge(std::size_t u, std::size_t v, std::string label = {});
  std::size_t add_vertex() { return vertex_count_++; }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::vector<std::string> edge_labels() const;
  std::size_t component_count() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::unordered_set<std::string> labels_;
};

// Bipartite graph G = (S, T; E) without duplicate edges.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(GroundSet left, GroundSet right);
  BipartiteGraph(std::size_t left, std::size_t right)
      : BipartiteGraph(GroundSet(left), GroundSet(right)) {}

  // Throws DomainError on out-of-range endpoints or a duplicate edge.
  void add_edge(std::size_t s, std::size_t t);
  bool has_edge(std::size_t s, std::size_t t) const;

  const GroundSet& left() const { return left_; }
  const GroundSet& right() const { return right_; }
  std::size_t left_size() const { return left_.size(); }
  std::size_t right_size() const { return right_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Edges in insertion order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  const std::vector<std::size_t>& neighbors(std::size_t s) const {
    return adjacency_.at(s);
  }
  // Index of edge (s, t) in edges(), or npos.
  std::size_t edge_index(std::size_t s, std::size_t t) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  GroundSet left_;
  GroundSet right_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Directed graph without self-loops or duplicate arcs.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  // Throws DomainError on self-loops, duplicates, or out-of-range endpoints.
  void add_arc(std::size_t tail, std::size_t head);
  bool has_arc(std::size_t tail, std::size_t head) const;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& arcs() const {
    return arcs_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
};

// Maximum matching of the left vertices in `allowed` (a set over the left
// side). Returns match_of_left (npos when unmatched), one entry per left
// vertex.
std::vector<std::size_t> max_bipartite_matching(const BipartiteGraph& g,
                                                const ElementSet& allowed);

// Lengths of the cycles of a 2-regular edge subset of g, or an empty vector
// when `edges` (indices into g.edges()) is not 2-regular on every vertex.
std::vector<std::size_t> two_factor_cycle_lengths(
    const BipartiteGraph& g, const std::vector<std::size_t>& edges);

// {"vertices": n, "edges": [{"u": 0, "v": 1, "label": "a"}, ...]}
nlohmann::json to_json(const MultiGraph& g);
MultiGraph multigraph_from_json(const nlohmann::json& j);
// {"left": nS | [labels], "right": nT | [labels], "edges": [[s, t], ...]}
nlohmann::json to_json(const BipartiteGraph& g);
BipartiteGraph bipartite_from_json(const nlohmann::json& j);
// {"vertices": n, "arcs": [[u, v], ...]}
nlohmann::json to_json(const Digraph& d);
Digraph digraph_from_json(const nlohmann::json& j);

// Graphviz renderings. Edge labels are quoted; `highlight` edges (by index)
// are drawn bold.
std::string to_dot(const MultiGraph& g, const std::string& name,
                   const std::vector<std::size_t>& highlight = {});
std::string to_dot(const BipartiteGraph& g, const std::string& name,
                   const std::vector<std::size_t>& highlight = {});
std::string to_dot(const Digraph& d, const std::string& name,
                   const std::vector<std::size_t>& highlight = {});

}  // namespace matkit

#endif  // MATKIT_GRAPHS_HPP_
