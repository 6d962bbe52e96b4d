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
#include "matkit/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>
#include <utility>

#include "matkit/errors.hpp"

namespace matkit {

PartitionOfGroundSet::PartitionOfGroundSet(
    std::size_t universe, const std::vector<std::vector<std::size_t>>& blocks)
    : universe_(universe), block_of_(universe, static_cast<std::size_t>(-1)) {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw PreconditionError("partition block " + std::to_string(b) +
                              " is empty");
    }
    ElementSet block(universe);
    for (std::size_t e : blocks[b]) {
      if (e >= universe) {
        throw PreconditionError("partition element " + std::to_string(e) +
                                " outside universe");
      }
      if (block_of_[e] != static_cast<std::size_t>(-1)) {
        throw PreconditionError("element " + std::to_string(e) +
                                " appears in two partition blocks");
      }
      block_of_[e] = b;
      block.insert(e);
    }
    blocks_.push_back(std::move(block));
  }
  for (std::size_t e = 0; e < universe; ++e) {
    if (block_of_[e] == static_cast<std::size_t>(-1)) {
      throw PreconditionError("element " + std::to_string(e) +
                              " is not covered by the partition");
    }
  }
}

PartitionOfGroundSet PartitionOfGroundSet::consecutive_pairs(
    std::size_t universe) {
  if (universe % 2 != 0) {
    throw PreconditionError("pairing needs an even universe");
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < universe; i += 2) blocks.push_back({i, i + 1});
  return PartitionOfGroundSet(universe, blocks);
}

PartitionOfGroundSet PartitionOfGroundSet::singletons(std::size_t universe) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < universe; ++i) blocks.push_back({i});
  return PartitionOfGroundSet(universe, blocks);
}

std::vector<std::vector<std::size_t>> PartitionOfGroundSet::as_lists() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : blocks_) out.push_back(b.elements());
  return out;
}

ElementSet PartitionOfGroundSet::union_of(
    const std::vector<bool>& chosen) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < blocks_.size() && i < chosen.size(); ++i) {
    if (chosen[i]) out |= blocks_[i];
  }
  return out;
}

bool PartitionOfGroundSet::is_modular(const ElementSet& x) const {
  for (const auto& b : blocks_) {
    if (b.intersects(x) && !b.is_subset_of(x)) return false;
  }
  return true;
}

bool PartitionOfGroundSet::all_blocks_have_size(std::size_t size) const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [&](const ElementSet& b) { return b.count() == size; });
}

void HyperplaneFamily::validate() const {
  const std::size_t n = universe.size();
  if (r < 2) throw PreconditionError("paving rank must be at least 2");
  if (n < r) {
    throw PreconditionError("ground set smaller than the paving rank");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].universe_size() != n) {
      throw PreconditionError("hyperplane " + std::to_string(i) +
                              " is over the wrong universe");
    }
    if (sets[i].count() < r) {
      throw PreconditionError("hyperplane " + std::to_string(i) + " " +
                              to_string(sets[i], universe) +
                              " has fewer than r elements");
    }
    if (sets[i].count() == n) {
      throw PreconditionError("hyperplane " + std::to_string(i) +
                              " is not a proper subset");
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i] & sets[j]).count() + 2 > r) {
        throw PreconditionError(
            "hyperplanes " + to_string(sets[i], universe) + " and " +
            to_string(sets[j], universe) + " share more than r - 2 elements");
      }
    }
  }
}

namespace {

nlohmann::json sets_to_json(const std::vector<ElementSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : sets) out.push_back(s.elements());
  return out;
}

class FreeOracle final : public IndependenceOracle {
 public:
  explicit FreeOracle(std::size_t n) : n_(n) {}
  bool independent(const ElementSet&) const override { return true; }
  nlohmann::json describe() const override {
    return {{"kind", "free"}, {"n", n_}};
  }

 private:
  std::size_t n_;
};

class UniformOracle final : public IndependenceOracle {
 public:
  UniformOracle(std::size_t n, std::size_t r) : n_(n), r_(r) {}
  bool independent(const ElementSet& x) const override {
    return x.count() <= r_;
  }
  nlohmann::json describe() const override {
    return {{"kind", "uniform"}, {"n", n_}, {"r", r_}};
  }

 private:
  std::size_t n_, r_;
};

class PartitionOracle final : public IndependenceOracle {
 public:
  PartitionOracle(PartitionOfGroundSet partition,
                  std::vector<std::size_t> caps)
      : partition_(std::move(partition)), caps_(std::move(caps)) {}

  bool independent(const ElementSet& x) const override {
    std::vector<std::size_t> used(caps_.size());
    bool ok = true;
    x.for_each([&](std::size_t e) {
      const std::size_t b = partition_.block_of(e);
      if (++used[b] > caps_[b]) ok = false;
    });
    return ok;
  }

  nlohmann::json describe() const override {
    return {{"kind", "partition"},
            {"n", partition_.universe()},
            {"blocks", partition_.as_lists()},
            {"caps", caps_}};
  }

 private:
  PartitionOfGroundSet partition_;
  std::vector<std::size_t> caps_;
};

class GraphicOracle final : public IndependenceOracle {
 public:
  explicit GraphicOracle(MultiGraph g) : g_(std::move(g)) {}

  bool independent(const ElementSet& x) const override {
    std::vector<std::size_t> parent(g_.vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t e = x.first(); e != ElementSet::npos; e = x.next(e)) {
      const auto& edge = g_.edge(e);
      const std::size_t a = find(edge.u), b = find(edge.v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

  nlohmann::json describe() const override {
    return {{"kind", "graphic"}, {"graph", to_json(g_)}};
  }

 private:
  MultiGraph g_;
};

class TransversalOracle final : public IndependenceOracle {
 public:
  explicit TransversalOracle(BipartiteGraph g) : g_(std::move(g)) {}

  bool independent(const ElementSet& x) const override {
    if (x.count() > g_.right_size()) return false;
    const auto match = max_bipartite_matching(g_, x);
    bool covered = true;
    x.for_each([&](std::size_t s) {
      if (match[s] == BipartiteGraph::npos) covered = false;
    });
    return covered;
  }

  nlohmann::json describe() const override {
    return {{"kind", "transversal"}, {"graph", to_json(g_)}};
  }

 private:
  BipartiteGraph g_;
};

class PavingOracle final : public IndependenceOracle {
 public:
  explicit PavingOracle(HyperplaneFamily h) : h_(std::move(h)) {}

  bool independent(const ElementSet& x) const override {
    const std::size_t size = x.count();
    if (size < h_.r) return true;
    if (size > h_.r) return false;
    for (const auto& hyperplane : h_.sets) {
      if (x.is_subset_of(hyperplane)) return false;
    }
    return true;
  }

  nlohmann::json describe() const override {
    return {{"kind", "paving"},
            {"n", h_.universe.size()},
            {"r", h_.r},
            {"hyperplanes", sets_to_json(h_.sets)}};
  }

 private:
  HyperplaneFamily h_;
};

class LinearOracle final : public IndependenceOracle {
 public:
  explicit LinearOracle(MatrixOverField m) : m_(std::move(m)) {}

  bool independent(const ElementSet& x) const override {
    if (x.count() > m_.rows()) return false;
    return m_.column_rank(x) == x.count();
  }

  nlohmann::json describe() const override {
    return {{"kind", "linear"}, {"matrix", matrix_to_json(m_)}};
  }

 private:
  MatrixOverField m_;
};

class FamilyOracle final : public IndependenceOracle {
 public:
  FamilyOracle(std::size_t n, const std::vector<ElementSet>& family)
      : n_(n), family_(family.begin(), family.end()) {}

  bool independent(const ElementSet& x) const override {
    return family_.contains(x);
  }

  nlohmann::json describe() const override {
    std::vector<ElementSet> sorted(family_.begin(), family_.end());
    std::sort(sorted.begin(), sorted.end());
    return {{"kind", "family"}, {"n", n_}, {"independent", sets_to_json(sorted)}};
  }

 private:
  std::size_t n_;
  std::unordered_set<ElementSet, ElementSetHash> family_;
};

class DirectSumOracle final : public IndependenceOracle {
 public:
  explicit DirectSumOracle(std::vector<Matroid> parts)
      : parts_(std::move(parts)) {
    std::size_t offset = 0;
    for (const auto& p : parts_) {
      offsets_.push_back(offset);
      offset += p.size();
    }
  }

  bool independent(const ElementSet& x) const override {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const std::size_t size = parts_[i].size();
      const std::size_t lo = offsets_[i];
      ElementSet slice(size);
      bool any = false;
      std::size_t e = lo == 0 ? x.first() : x.next(lo - 1);
      for (; e != ElementSet::npos && e < lo + size; e = x.next(e)) {
        slice.insert(e - lo);
        any = true;
      }
      if (any && !parts_[i].oracle()->independent(slice)) return false;
    }
    return true;
  }

  nlohmann::json describe() const override {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : parts_) parts.push_back(p.to_json());
    return {{"kind", "direct_sum"}, {"parts", parts}};
  }

 private:
  std::vector<Matroid> parts_;
  std::vector<std::size_t> offsets_;
};

class TruncationOracle final : public IndependenceOracle {
 public:
  TruncationOracle(Matroid inner, std::size_t k)
      : inner_(std::move(inner)), k_(k) {}

  bool independent(const ElementSet& x) const override {
    return x.count() <= k_ && inner_.oracle()->independent(x);
  }

  nlohmann::json describe() const override {
    return {{"kind", "truncate"}, {"k", k_}, {"of", inner_.to_json()}};
  }

 private:
  Matroid inner_;
  std::size_t k_;
};

class DualOracle final : public IndependenceOracle {
 public:
  explicit DualOracle(Matroid inner)
      : inner_(std::move(inner)), full_rank_(rank(inner_)) {}

  bool independent(const ElementSet& x) const override {
    if (x.count() + full_rank_ > inner_.size()) return false;
    return rank(inner_, x.complement()) == full_rank_;
  }

  nlohmann::json describe() const override {
    return {{"kind", "dual"}, {"of", inner_.to_json()}};
  }

 private:
  Matroid inner_;
  std::size_t full_rank_;
};

class ParallelCopiesOracle final : public IndependenceOracle {
 public:
  ParallelCopiesOracle(Matroid inner, std::size_t k)
      : inner_(std::move(inner)), k_(k) {}

  bool independent(const ElementSet& x) const override {
    const std::size_t n = inner_.size();
    ElementSet projected(n);
    for (std::size_t e = x.first(); e != ElementSet::npos; e = x.next(e)) {
      const std::size_t base = e % n;
      if (projected.contains(base)) return false;
      projected.insert(base);
    }
    return inner_.oracle()->independent(projected);
  }

  nlohmann::json describe() const override {
    return {{"kind", "parallel_copies"}, {"k", k_}, {"of", inner_.to_json()}};
  }

 private:
  Matroid inner_;
  std::size_t k_;
};

class PermutedOracle final : public IndependenceOracle {
 public:
  PermutedOracle(Matroid inner, std::vector<std::size_t> order)
      : inner_(std::move(inner)), order_(std::move(order)) {}

  bool independent(const ElementSet& x) const override {
    ElementSet original(inner_.size());
    x.for_each([&](std::size_t e) { original.insert(order_[e]); });
    return inner_.oracle()->independent(original);
  }

  nlohmann::json describe() const override {
    return {{"kind", "permute"}, {"order", order_}, {"of", inner_.to_json()}};
  }

 private:
  Matroid inner_;
  std::vector<std::size_t> order_;
};

}  // namespace

Matroid free_matroid(const GroundSet& ground) {
  return Matroid(ground, std::make_shared<FreeOracle>(ground.size()));
}

Matroid uniform_matroid(const GroundSet& ground, std::size_t r) {
  if (r > ground.size()) {
    throw DomainError("uniform matroid rank " + std::to_string(r) +
                      " exceeds ground set size " +
                      std::to_string(ground.size()));
  }
  return Matroid(ground, std::make_shared<UniformOracle>(ground.size(), r));
}

Matroid partition_matroid(const PartitionOfGroundSet& partition,
                          const std::vector<std::size_t>& caps) {
  if (caps.size() != partition.block_count()) {
    throw DomainError("one cap per partition block required");
  }
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (caps[i] > partition.block(i).count()) {
      throw DomainError("cap " + std::to_string(caps[i]) + " of block " +
                        std::to_string(i) + " exceeds the block size");
    }
  }
  return Matroid(GroundSet(partition.universe()),
                 std::make_shared<PartitionOracle>(partition, caps));
}

Matroid graphic_matroid(const MultiGraph& graph) {
  return Matroid(GroundSet(graph.edge_labels()),
                 std::make_shared<GraphicOracle>(graph));
}

Matroid transversal_matroid(const BipartiteGraph& graph) {
  return Matroid(graph.left(), std::make_shared<TransversalOracle>(graph));
}

Matroid paving_matroid(const HyperplaneFamily& family) {
  family.validate();
  return Matroid(family.universe, std::make_shared<PavingOracle>(family));
}

Matroid linear_matroid(const MatrixOverField& matrix) {
  return linear_matroid(matrix, GroundSet(matrix.cols()));
}

Matroid linear_matroid(const MatrixOverField& matrix, const GroundSet& ground) {
  if (ground.size() != matrix.cols()) {
    throw DomainError("ground set size differs from the column count");
  }
  return Matroid(ground, std::make_shared<LinearOracle>(matrix));
}

Matroid set_family_matroid(const GroundSet& ground,
                           const std::vector<ElementSet>& independent_sets) {
  for (const auto& s : independent_sets) {
    if (s.universe_size() != ground.size()) {
      throw DomainError("family member over the wrong universe");
    }
  }
  return Matroid(ground,
                 std::make_shared<FamilyOracle>(ground.size(), independent_sets));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  return direct_sum(std::vector<Matroid>{m1, m2});
}

Matroid direct_sum(const std::vector<Matroid>& parts) {
  std::size_t total = 0;
  bool any_labels = false;
  for (const auto& p : parts) {
    total += p.size();
    any_labels = any_labels || p.ground().has_labels();
  }
  GroundSet ground(total);
  if (any_labels) {
    std::vector<std::string> labels;
    std::unordered_set<std::string> seen;
    bool unique = true;
    for (const auto& p : parts) {
      for (std::size_t e = 0; e < p.size(); ++e) {
        labels.push_back(p.ground().label(e));
        unique = unique && seen.insert(labels.back()).second;
      }
    }
    if (!unique) {
      labels.clear();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t e = 0; e < parts[i].size(); ++e) {
          labels.push_back("m" + std::to_string(i) + "." +
                           parts[i].ground().label(e));
        }
      }
    }
    ground = GroundSet(std::move(labels));
  }
  return Matroid(std::move(ground), std::make_shared<DirectSumOracle>(parts));
}

Matroid truncate(const Matroid& m, std::size_t k) {
  return Matroid(m.ground(), std::make_shared<TruncationOracle>(m, k));
}

Matroid dual(const Matroid& m) {
  return Matroid(m.ground(), std::make_shared<DualOracle>(m));
}

Matroid parallel_copies(const Matroid& m, std::size_t k) {
  if (k < 1) throw DomainError("parallel_copies needs k >= 1");
  std::vector<std::string> labels;
  labels.reserve(k * m.size());
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      labels.push_back(m.ground().label(e) + "#" + std::to_string(j + 1));
    }
  }
  return Matroid(GroundSet(std::move(labels)),
                 std::make_shared<ParallelCopiesOracle>(m, k));
}

Matroid permute_ground(const Matroid& m,
                       const std::vector<std::size_t>& order) {
  if (order.size() != m.size()) {
    throw DomainError("permutation length differs from the ground set size");
  }
  std::vector<char> used(m.size());
  std::vector<std::string> labels;
  for (std::size_t old : order) {
    if (old >= m.size() || used[old]) {
      throw DomainError("ground order is not a permutation");
    }
    used[old] = 1;
    labels.push_back(m.ground().label(old));
  }
  GroundSet ground = m.ground().has_labels() ? GroundSet(std::move(labels))
                                             : GroundSet(m.size());
  return Matroid(std::move(ground),
                 std::make_shared<PermutedOracle>(m, order));
}

MatrixOverField transversal_linear_representation(const BipartiteGraph& g,
                                                  std::uint32_t p,
                                                  std::uint64_t seed) {
  if (p < kMinRepresentationPrime) {
    throw DomainError("representation prime " + std::to_string(p) +
                      " is below 10^6");
  }
  MatrixOverField m(Field::prime(p), g.right_size(), g.left_size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
  for (const auto& [s, t] : g.edges()) m.set_mod(t, s, nonzero(rng));
  return m;
}

}  // namespace matkit
