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
#include "matkit/gadget.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "matkit/constructions.hpp"
#include "matkit/errors.hpp"

namespace matkit {

namespace {

constexpr std::array<TemplateEdge, 6> kK4Edges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Labels that span the K4 in each graph, in label order.
constexpr std::array<std::size_t, 6> kFirstK4Labels = {
    kLabelA, kLabelB, kLabelC, kLabelD, kLabelE, kLabelF};
constexpr std::array<std::size_t, 6> kSecondK4Labels = {
    kLabelA, kLabelB, kLabelC, kLabelD, kLabelG, kLabelH};

using EdgeList = std::vector<TemplateEdge>;

// Forest test for the edges selected by `mask` (bit e = edge e).
bool is_forest(const EdgeList& edges, std::size_t vertices, std::uint64_t mask) {
  std::array<std::size_t, 64> parent{};
  std::vector<std::size_t> heap_parent;
  std::size_t* p = parent.data();
  if (vertices > parent.size()) {
    heap_parent.resize(vertices);
    p = heap_parent.data();
  }
  std::iota(p, p + vertices, std::size_t{0});
  auto find = [p](std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  while (mask) {
    const int e = std::countr_zero(mask);
    mask &= mask - 1;
    const std::size_t a = find(edges[e].u), b = find(edges[e].v);
    if (a == b) return false;
    p[a] = b;
  }
  return true;
}

struct GlobalEdges {
  EdgeList first;
  EdgeList second;
  std::size_t vertices = 0;
};

GlobalEdges global_edges(const GadgetPair& pair) {
  GlobalEdges g;
  for (const auto& e : pair.first_graph.edges()) g.first.push_back({e.u, e.v});
  for (const auto& e : pair.second_graph.edges()) {
    g.second.push_back({e.u, e.v});
  }
  g.vertices = std::max(pair.first_graph.vertex_count(),
                        pair.second_graph.vertex_count());
  return g;
}

struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t feasible = 0;
  std::optional<std::uint64_t> witness;         // class containing a_1
  std::optional<std::uint64_t> counterexample;  // class containing a_1
  bool efgh_together = true;
  bool i_opposite = true;
};

std::size_t resolve_threads(std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

// Per-block check of the structural filters on one feasible split.
void apply_filters(std::uint64_t cls, std::size_t ell, SweepResult& r) {
  std::optional<bool> side_of_efgh;
  for (std::size_t j = 0; j < ell; ++j) {
    auto side = [&](std::size_t l) {
      return ((cls >> gadget_element(j, l)) & 1) != 0;
    };
    const bool e = side(kLabelE);
    const bool together = side(kLabelF) == e && side(kLabelG) == e &&
                          side(kLabelH) == e;
    std::size_t in_cls = 0;
    for (std::size_t l = 0; l < kLabelI; ++l) in_cls += side(l);
    if (!together || (in_cls != 5 && in_cls != 3)) r.efgh_together = false;
    if (!together || side(kLabelI) == e ||
        (side_of_efgh && *side_of_efgh != e)) {
      r.i_opposite = false;
    }
    side_of_efgh = e;
  }
}

SweepResult sweep_range(const GlobalEdges& g, std::size_t ell,
                        std::uint64_t begin, std::uint64_t end) {
  SweepResult r;
  const std::size_t n = kBlockSize * ell;
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1;
  const int big = static_cast<int>(5 * ell);
  const int small = static_cast<int>(4 * ell);
  for (std::uint64_t m = begin; m < end; ++m) {
    ++r.checked;
    const std::uint64_t s1 = (m << 1) | 1;
    const std::uint64_t s2 = full & ~s1;
    const int c1 = std::popcount(s1);
    const int c2 = static_cast<int>(n) - c1;
    if (c1 > big || c2 > big) continue;  // rank bound
    if (!is_forest(g.first, g.vertices, s1) ||
        !is_forest(g.first, g.vertices, s2) ||
        !is_forest(g.second, g.vertices, s1) ||
        !is_forest(g.second, g.vertices, s2)) {
      continue;
    }
    ++r.feasible;
    const bool sized = (c1 == big && c2 == small) || (c1 == small && c2 == big);
    if (sized) {
      if (!r.witness) r.witness = s1;
    } else if (!r.counterexample) {
      r.counterexample = s1;
    }
    apply_filters(s1, ell, r);
  }
  return r;
}

void merge(SweepResult& into, const SweepResult& part) {
  into.checked += part.checked;
  into.feasible += part.feasible;
  // Ranges are merged in ascending order, so the first found stays minimal.
  if (!into.witness) into.witness = part.witness;
  if (!into.counterexample) into.counterexample = part.counterexample;
  into.efgh_together = into.efgh_together && part.efgh_together;
  into.i_opposite = into.i_opposite && part.i_opposite;
}

std::pair<ElementSet, ElementSet> split_from_mask(std::size_t n,
                                                  std::uint64_t cls) {
  ElementSet a = ElementSet::from_mask(n, cls);
  ElementSet b = a.complement();
  if (a.count() < b.count()) std::swap(a, b);
  return {a, b};
}

// --- labeling search -------------------------------------------------------

using K4Assignment = std::array<std::size_t, 6>;  // label slot -> K4 edge

std::size_t k4_edge_index(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  for (std::size_t i = 0; i < kK4Edges.size(); ++i) {
    if (kK4Edges[i].u == u && kK4Edges[i].v == v) return i;
  }
  throw Error("not a K4 edge");
}

// Labelings that are lexicographically smallest among their images under
// the 24 vertex permutations of K4.
std::vector<K4Assignment> canonical_k4_assignments() {
  std::vector<std::array<std::size_t, 6>> edge_maps;
  std::array<std::size_t, 4> sigma = {0, 1, 2, 3};
  do {
    std::array<std::size_t, 6> map{};
    for (std::size_t i = 0; i < 6; ++i) {
      map[i] = k4_edge_index(sigma[kK4Edges[i].u], sigma[kK4Edges[i].v]);
    }
    edge_maps.push_back(map);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<K4Assignment> out;
  K4Assignment a = {0, 1, 2, 3, 4, 5};
  do {
    bool canonical = true;
    for (const auto& map : edge_maps) {
      K4Assignment image{};
      for (std::size_t k = 0; k < 6; ++k) image[k] = map[a[k]];
      if (image < a) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::size_t template_rank(const std::array<TemplateEdge, kBlockSize>& edges) {
  EdgeList list(edges.begin(), edges.end());
  std::size_t rank = 0;
  std::uint64_t kept = 0;
  for (std::size_t e = 0; e < list.size(); ++e) {
    if (is_forest(list, kBlockVertices, kept | (std::uint64_t{1} << e))) {
      kept |= std::uint64_t{1} << e;
      ++rank;
    }
  }
  return rank;
}

// First attachment of the two bridge labels (and the parallel i edge) in
// lexicographic order of endpoint pairs that gives block rank 5. Every such
// attachment yields the same matroid, so the first one is taken.
bool attach_bridges(std::array<TemplateEdge, kBlockSize>& edges,
                    std::size_t first_bridge, std::size_t second_bridge) {
  std::vector<TemplateEdge> pairs;
  for (std::size_t u = 0; u < kBlockVertices; ++u) {
    for (std::size_t v = u + 1; v < kBlockVertices; ++v) pairs.push_back({u, v});
  }
  for (const auto& p : pairs) {
    for (const auto& q : pairs) {
      edges[first_bridge] = p;
      edges[second_bridge] = q;
      edges[kLabelI] = q;
      if (template_rank(edges) == 5) return true;
    }
  }
  return false;
}

bool certified_at(const GadgetBlockLabeling& labeling, std::size_t ell,
                  std::size_t threads) {
  const GadgetPair pair = build_gadget(labeling, ell);
  const GlobalEdges g = global_edges(pair);
  const auto [big, small] = standard_gadget_split(ell);
  const std::uint64_t b = big.to_mask(), s = small.to_mask();
  if (!is_forest(g.first, g.vertices, b) || !is_forest(g.first, g.vertices, s) ||
      !is_forest(g.second, g.vertices, b) ||
      !is_forest(g.second, g.vertices, s)) {
    return false;
  }
  const GadgetCertificate cert = verify_gadget(pair, threads);
  return cert.passed() && cert.efgh_together && cert.i_opposite_efgh;
}

// Per-block tables for the blockwise size computation.
struct BlockTables {
  std::array<bool, 512> first_ok{};
  // Indexed by mask of a..h plus (side of the previous block's i) << 8.
  std::array<bool, 512> second_ok{};
};

BlockTables block_tables(const GadgetBlockLabeling& labeling) {
  BlockTables t;
  EdgeList first(labeling.first.begin(), labeling.first.end());
  EdgeList second(labeling.second.begin(), labeling.second.end());
  for (std::uint64_t m = 0; m < 512; ++m) {
    t.first_ok[m] = is_forest(first, kBlockVertices, m) &&
                    is_forest(first, kBlockVertices, 511 & ~m);
    t.second_ok[m] = is_forest(second, kBlockVertices, m) &&
                     is_forest(second, kBlockVertices, 511 & ~m);
  }
  return t;
}

}  // namespace

char block_label_letter(std::size_t label) {
  if (label >= kBlockSize) throw DomainError("block label out of range");
  return static_cast<char>('a' + label);
}

GadgetPair build_gadget(const GadgetBlockLabeling& labeling, std::size_t ell) {
  if (ell < 1) throw DomainError("gadget needs at least one block");
  MultiGraph first(kBlockVertices * ell), second(kBlockVertices * ell);
  for (std::size_t j = 0; j < ell; ++j) {
    const std::size_t base = kBlockVertices * j;
    const std::size_t next = kBlockVertices * ((j + 1) % ell);
    for (std::size_t l = 0; l < kBlockSize; ++l) {
      const std::string name =
          std::string(1, block_label_letter(l)) + "_" + std::to_string(j + 1);
      const TemplateEdge& e1 = labeling.first[l];
      first.add_edge(base + e1.u, base + e1.v, name);
      const TemplateEdge& e2 = labeling.second[l];
      const std::size_t at = (l == kLabelI) ? next : base;
      second.add_edge(at + e2.u, at + e2.v, name);
    }
  }
  Matroid m1 = graphic_matroid(first);
  Matroid m2 = graphic_matroid(second);
  return GadgetPair{ell, labeling, std::move(first), std::move(second),
                    std::move(m1), std::move(m2)};
}

std::pair<ElementSet, ElementSet> standard_gadget_split(std::size_t ell) {
  ElementSet big(kBlockSize * ell), small(kBlockSize * ell);
  for (std::size_t j = 0; j < ell; ++j) {
    for (std::size_t l : {kLabelD, kLabelE, kLabelF, kLabelG, kLabelH}) {
      big.insert(gadget_element(j, l));
    }
    for (std::size_t l : {kLabelA, kLabelB, kLabelC, kLabelI}) {
      small.insert(gadget_element(j, l));
    }
  }
  return {big, small};
}

GadgetCertificate verify_gadget(const GadgetPair& pair, std::size_t threads,
                                std::size_t cap) {
  const std::size_t n = kBlockSize * pair.ell;
  if (n > cap || n > 63) {
    throw ResourceLimitError("gadget sweep is too large",
                             n, cap);
  }
  const GlobalEdges g = global_edges(pair);
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  threads = std::min<std::uint64_t>(resolve_threads(threads),
                                    std::max<std::uint64_t>(1, total / 4096));

  std::vector<SweepResult> parts(threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (std::size_t w = 0; w < threads; ++w) {
    const std::uint64_t begin = std::min(total, w * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    workers.emplace_back([&, w, begin, end] {
      parts[w] = sweep_range(g, pair.ell, begin, end);
    });
  }
  for (auto& t : workers) t.join();
  SweepResult all;
  for (const auto& p : parts) merge(all, p);

  GadgetCertificate cert;
  cert.ell = pair.ell;
  cert.bipartitions_checked = all.checked;
  cert.feasible_bipartitions = all.feasible;
  cert.efgh_together = all.efgh_together;
  cert.i_opposite_efgh = all.i_opposite;
  cert.condition_a = all.witness.has_value();
  cert.condition_b = !all.counterexample.has_value();
  if (all.counterexample) {
    cert.counterexample = split_from_mask(n, *all.counterexample);
  }
  if (all.witness) {
    // Prefer the standard split when it is feasible.
    const auto standard = standard_gadget_split(pair.ell);
    const std::uint64_t b = standard.first.to_mask();
    const std::uint64_t s = standard.second.to_mask();
    const bool standard_ok =
        is_forest(g.first, g.vertices, b) && is_forest(g.first, g.vertices, s) &&
        is_forest(g.second, g.vertices, b) && is_forest(g.second, g.vertices, s);
    cert.witness = standard_ok ? standard : split_from_mask(n, *all.witness);
  }
  return cert;
}

std::vector<bool> achievable_class_sizes(const GadgetBlockLabeling& labeling,
                                         std::size_t ell) {
  if (ell < 1) throw DomainError("gadget needs at least one block");
  const BlockTables t = block_tables(labeling);
  const std::size_t n = kBlockSize * ell;
  std::vector<bool> result(n + 1, false);
  // Walk the blocks in order, tracking the side of the previous block's i
  // edge; the last block's i closes the cycle back to block 1.
  for (std::size_t wrap = 0; wrap < 2; ++wrap) {
    std::array<std::vector<bool>, 2> reach;
    reach[0].assign(n + 1, false);
    reach[1].assign(n + 1, false);
    reach[wrap][0] = true;
    for (std::size_t j = 0; j < ell; ++j) {
      std::array<std::vector<bool>, 2> next;
      next[0].assign(n + 1, false);
      next[1].assign(n + 1, false);
      for (std::size_t prev = 0; prev < 2; ++prev) {
        for (std::size_t m = 0; m < 512; ++m) {
          if (!t.first_ok[m]) continue;
          if (!t.second_ok[(m & 255) | (prev << 8)]) continue;
          const std::size_t side_of_i = (m >> 8) & 1;
          const std::size_t add = std::popcount(m);
          for (std::size_t c = 0; c + add <= n; ++c) {
            if (reach[prev][c]) next[side_of_i][c + add] = true;
          }
        }
      }
      reach = std::move(next);
    }
    for (std::size_t c = 0; c <= n; ++c) {
      if (reach[wrap][c]) result[c] = true;
    }
  }
  return result;
}

GadgetBlockLabeling search_block_labeling(GadgetSearchStats* stats,
                                          std::size_t threads) {
  const std::vector<K4Assignment> classes = canonical_k4_assignments();
  GadgetSearchStats local;
  local.first_graph_classes = classes.size();
  local.second_graph_classes = classes.size();

  std::vector<GadgetBlockLabeling> firsts, seconds;
  for (const auto& a : classes) {
    GadgetBlockLabeling l;
    for (std::size_t k = 0; k < 6; ++k) l.first[kFirstK4Labels[k]] = kK4Edges[a[k]];
    if (attach_bridges(l.first, kLabelG, kLabelH)) firsts.push_back(l);
    GadgetBlockLabeling r;
    for (std::size_t k = 0; k < 6; ++k) {
      r.second[kSecondK4Labels[k]] = kK4Edges[a[k]];
    }
    if (attach_bridges(r.second, kLabelE, kLabelF)) seconds.push_back(r);
  }
  for (const auto& f : firsts) {
    for (const auto& s : seconds) {
      GadgetBlockLabeling candidate;
      candidate.first = f.first;
      candidate.second = s.second;
      ++local.candidates_tried;
      if (certified_at(candidate, 1, threads) &&
          certified_at(candidate, 2, threads)) {
        if (stats) *stats = local;
        return candidate;
      }
    }
  }
  if (stats) *stats = local;
  throw Error("no block labeling passes gadget certification");
}

const GadgetBlockLabeling& certified_labeling() {
  static const GadgetBlockLabeling labeling = search_block_labeling();
  return labeling;
}

nlohmann::json labeling_to_json(const GadgetBlockLabeling& labeling) {
  auto edges = [](const std::array<TemplateEdge, kBlockSize>& es) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t l = 0; l < kBlockSize; ++l) {
      out.push_back({{"label", std::string(1, block_label_letter(l))},
                     {"u", es[l].u},
                     {"v", es[l].v}});
    }
    return out;
  };
  return {{"schema", "matkit.gadget.v1"},
          {"block_vertices", kBlockVertices},
          {"first", edges(labeling.first)},
          {"second", edges(labeling.second)},
          {"chaining",
           "second graph: edge i of block j lies in block j+1 (cyclic), "
           "parallel to f"}};
}

GadgetBlockLabeling labeling_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != "matkit.gadget.v1") {
    throw ParseError("expected schema matkit.gadget.v1", 0, "schema");
  }
  auto read = [&](const char* key) {
    std::array<TemplateEdge, kBlockSize> es{};
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != kBlockSize) {
      throw ParseError("need nine template edges", 0, key);
    }
    for (std::size_t l = 0; l < kBlockSize; ++l) {
      const auto& e = arr[l];
      if (e.at("label").get<std::string>() !=
          std::string(1, block_label_letter(l))) {
        throw ParseError("template edges must be listed a..i", 0, key);
      }
      es[l] = {e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>()};
      if (es[l].u >= kBlockVertices || es[l].v >= kBlockVertices) {
        throw ParseError("template vertex out of range", 0, key);
      }
    }
    return es;
  };
  try {
    GadgetBlockLabeling l;
    l.first = read("first");
    l.second = read("second");
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, "gadget");
  }
}

nlohmann::json certificate_to_json(const GadgetCertificate& cert,
                                   const GadgetPair& pair) {
  auto labels = [&](const ElementSet& s) {
    std::vector<std::string> out;
    s.for_each([&](std::size_t e) { out.push_back(pair.first.ground().label(e)); });
    return out;
  };
  nlohmann::json j = {{"schema", "matkit.gadget-certificate.v1"},
                      {"ell", cert.ell},
                      {"elements", kBlockSize * cert.ell},
                      {"rank_first", rank(pair.first)},
                      {"rank_second", rank(pair.second)},
                      {"bipartitions_checked", cert.bipartitions_checked},
                      {"feasible_bipartitions", cert.feasible_bipartitions},
                      {"condition_a", cert.condition_a},
                      {"condition_b", cert.condition_b},
                      {"efgh_together", cert.efgh_together},
                      {"i_opposite_efgh", cert.i_opposite_efgh},
                      {"passed", cert.passed()},
                      {"labeling", labeling_to_json(pair.labeling)}};
  j["witness"] = cert.witness
                     ? nlohmann::json{labels(cert.witness->first),
                                      labels(cert.witness->second)}
                     : nlohmann::json(nullptr);
  j["counterexample"] = cert.counterexample
                            ? nlohmann::json{labels(cert.counterexample->first),
                                             labels(cert.counterexample->second)}
                            : nlohmann::json(nullptr);
  return j;
}

std::string gadget_to_dot(const GadgetPair& pair) {
  const std::string suffix = "_" + std::to_string(pair.ell);
  return to_dot(pair.first_graph, "first" + suffix) +
         to_dot(pair.second_graph, "second" + suffix);
}

}  // namespace matkit
