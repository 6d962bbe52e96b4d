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
#include "matkit/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "matkit/errors.hpp"

namespace matkit {

std::size_t MultiGraph::add_edge(std::size_t u, std::size_t v,
                                 std::string label) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw DomainError("edge endpoint outside vertex range");
  }
  if (label.empty()) label = "e" + std::to_string(edges_.size());
  if (!labels_.insert(label).second) {
    throw DomainError("duplicate edge label '" + label + "'");
  }
  edges_.push_back({u, v, std::move(label)});
  return edges_.size() - 1;
}

std::vector<std::string> MultiGraph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

std::size_t MultiGraph::component_count() const {
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count_;
  for (const auto& e : edges_) {
    const std::size_t a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

BipartiteGraph::BipartiteGraph(GroundSet left, GroundSet right)
    : left_(std::move(left)),
      right_(std::move(right)),
      adjacency_(left_.size()) {}

void BipartiteGraph::add_edge(std::size_t s, std::size_t t) {
  if (s >= left_size() || t >= right_size()) {
    throw DomainError("bipartite edge (" + std::to_string(s) + ", " +
                      std::to_string(t) + ") outside vertex range");
  }
  if (has_edge(s, t)) {
    throw DomainError("duplicate bipartite edge (" + std::to_string(s) + ", " +
                      std::to_string(t) + ")");
  }
  edges_.emplace_back(s, t);
  adjacency_[s].push_back(t);
}

bool BipartiteGraph::has_edge(std::size_t s, std::size_t t) const {
  if (s >= adjacency_.size()) return false;
  const auto& adj = adjacency_[s];
  return std::find(adj.begin(), adj.end(), t) != adj.end();
}

std::size_t BipartiteGraph::edge_index(std::size_t s, std::size_t t) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].first == s && edges_[i].second == t) return i;
  }
  return npos;
}

void Digraph::add_arc(std::size_t tail, std::size_t head) {
  if (tail >= vertex_count_ || head >= vertex_count_) {
    throw DomainError("arc endpoint outside vertex range");
  }
  if (tail == head) {
    throw DomainError("self-loop at vertex " + std::to_string(tail));
  }
  if (has_arc(tail, head)) {
    throw DomainError("duplicate arc " + std::to_string(tail) + " -> " +
                      std::to_string(head));
  }
  arcs_.emplace_back(tail, head);
}

bool Digraph::has_arc(std::size_t tail, std::size_t head) const {
  return std::find(arcs_.begin(), arcs_.end(), std::make_pair(tail, head)) !=
         arcs_.end();
}

namespace {

// Kuhn's augmenting path search from left vertex s.
bool augment(const BipartiteGraph& g, std::size_t s,
             std::vector<std::size_t>& match_of_left,
             std::vector<std::size_t>& match_of_right,
             std::vector<char>& visited) {
  for (std::size_t t : g.neighbors(s)) {
    if (visited[t]) continue;
    visited[t] = 1;
    if (match_of_right[t] == BipartiteGraph::npos ||
        augment(g, match_of_right[t], match_of_left, match_of_right,
                visited)) {
      match_of_left[s] = t;
      match_of_right[t] = s;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::size_t> max_bipartite_matching(const BipartiteGraph& g,
                                                const ElementSet& allowed) {
  if (allowed.universe_size() != g.left_size()) {
    throw DomainError("matching restricted to a set over the wrong universe");
  }
  std::vector<std::size_t> match_of_left(g.left_size(), BipartiteGraph::npos);
  std::vector<std::size_t> match_of_right(g.right_size(),
                                          BipartiteGraph::npos);
  std::vector<char> visited(g.right_size());
  allowed.for_each([&](std::size_t s) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(g, s, match_of_left, match_of_right, visited);
  });
  return match_of_left;
}

std::vector<std::size_t> two_factor_cycle_lengths(
    const BipartiteGraph& g, const std::vector<std::size_t>& edges) {
  // Vertices: left s -> s, right t -> left_size + t.
  const std::size_t n = g.left_size() + g.right_size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t idx : edges) {
    if (idx >= g.edge_count()) return {};
    const auto [s, t] = g.edges()[idx];
    adj[s].push_back(g.left_size() + t);
    adj[g.left_size() + t].push_back(s);
  }
  for (const auto& a : adj) {
    if (a.size() != 2) return {};
  }
  std::vector<char> seen(n);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    std::size_t prev = n, cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      ++length;
      const std::size_t next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
    }
    lengths.push_back(length);
  }
  return lengths;
}

}  // namespace matkit

namespace matkit {

namespace {

GroundSet side_from_json(const nlohmann::json& j, const char* field) {
  if (j.is_number_unsigned()) return GroundSet(j.get<std::size_t>());
  if (j.is_array()) return GroundSet(j.get<std::vector<std::string>>());
  throw ParseError("expected a vertex count or a label list", 0, field);
}

nlohmann::json side_to_json(const GroundSet& g) {
  if (g.has_labels()) return g.labels();
  return g.size();
}

}  // namespace

nlohmann::json to_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
  }
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

MultiGraph multigraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ParseError("graph needs \"vertices\" and \"edges\"", 0, "graph");
  }
  MultiGraph g(j.at("vertices").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    try {
      if (e.is_array()) {
        g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      } else {
        g.add_edge(e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>(),
                   e.value("label", std::string()));
      }
    } catch (const DomainError& err) {
      throw ParseError(err.what(), 0, "edges");
    }
  }
  return g;
}

nlohmann::json to_json(const BipartiteGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [s, t] : g.edges()) edges.push_back({s, t});
  return {{"left", side_to_json(g.left())},
          {"right", side_to_json(g.right())},
          {"edges", edges}};
}

BipartiteGraph bipartite_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("left") || !j.contains("right") ||
      !j.contains("edges")) {
    throw ParseError("bipartite graph needs \"left\", \"right\", \"edges\"", 0,
                     "graph");
  }
  BipartiteGraph g(side_from_json(j.at("left"), "left"),
                   side_from_json(j.at("right"), "right"));
  for (const auto& e : j.at("edges")) {
    try {
      g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    } catch (const DomainError& err) {
      throw ParseError(err.what(), 0, "edges");
    }
  }
  return g;
}

nlohmann::json to_json(const Digraph& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"vertices", d.vertex_count()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs")) {
    throw ParseError("digraph needs \"vertices\" and \"arcs\"", 0, "digraph");
  }
  Digraph d(j.at("vertices").get<std::size_t>());
  for (const auto& a : j.at("arcs")) {
    try {
      d.add_arc(a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>());
    } catch (const DomainError& err) {
      throw ParseError(err.what(), 0, "arcs");
    }
  }
  return d;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

bool is_highlighted(const std::vector<std::size_t>& highlight, std::size_t i) {
  return std::find(highlight.begin(), highlight.end(), i) != highlight.end();
}

}  // namespace

std::string to_dot(const MultiGraph& g, const std::string& name,
                   const std::vector<std::size_t>& highlight) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    out << "  " << e.u << " -- " << e.v << " [label=" << quoted(e.label);
    if (is_highlighted(highlight, i)) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const BipartiteGraph& g, const std::string& name,
                   const std::vector<std::size_t>& highlight) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (std::size_t s = 0; s < g.left_size(); ++s) {
    out << "  s" << s << " [label=" << quoted(g.left().label(s)) << "];\n";
  }
  for (std::size_t t = 0; t < g.right_size(); ++t) {
    out << "  t" << t << " [label=" << quoted(g.right().label(t))
        << ", shape=box];\n";
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& [s, t] = g.edges()[i];
    out << "  s" << s << " -- t" << t;
    if (is_highlighted(highlight, i)) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& d, const std::string& name,
                   const std::vector<std::size_t>& highlight) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    const auto& [u, v] = d.arcs()[i];
    out << "  " << u << " -> " << v;
    if (is_highlighted(highlight, i)) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace matkit
