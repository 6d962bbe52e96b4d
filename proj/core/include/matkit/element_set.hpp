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
#ifndef MATKIT_ELEMENT_SET_HPP_
#define MATKIT_ELEMENT_SET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace matkit {

// A finite ground set {0, ..., size-1} with optional display labels.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::size_t size) : size_(size) {}
  // Labels must be unique; size is labels.size().
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Display label; the decimal index when the ground set is unlabeled.
  std::string label(std::size_t element) const;
  std::optional<std::size_t> find(std::string_view label) const;

  bool operator==(const GroundSet& other) const {
    return size_ == other.size_ && labels_ == other.labels_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A subset of a ground set, stored as a bitset over the universe size.
// Binary set operations require equal universes and throw DomainError
// otherwise.
class ElementSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  static constexpr std::size_t npos = Bits::npos;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members);
  ElementSet(std::size_t universe, const std::vector<std::size_t>& members);

  static ElementSet full(std::size_t universe);
  // Bit i of `mask` is element i. Requires universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t e) const { return e < bits_.size() && bits_.test(e); }

  void insert(std::size_t e);
  void erase(std::size_t e);
  ElementSet with(std::size_t e) const;
  ElementSet without(std::size_t e) const;

  // Lowest member, or npos.
  std::size_t first() const { return bits_.find_first(); }
  // Lowest member greater than e, or npos.
  std::size_t next(std::size_t e) const { return bits_.find_next(e); }

  std::vector<std::size_t> elements() const;
  std::uint64_t to_mask() const;

  ElementSet operator|(const ElementSet& o) const;
  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator-(const ElementSet& o) const;
  ElementSet complement() const;
  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator-=(const ElementSet& o);

  bool is_subset_of(const ElementSet& o) const;
  bool intersects(const ElementSet& o) const;

  bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }
  // Orders by universe size, then by the bitset read as a binary number
  // with element 0 as the least significant bit.
  std::strong_ordering operator<=>(const ElementSet& o) const;

  std::size_t hash() const;
  const Bits& bits() const { return bits_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t e = bits_.find_first(); e != npos; e = bits_.find_next(e)) {
      f(e);
    }
  }

 private:
  explicit ElementSet(Bits bits) : bits_(std::move(bits)) {}
  void require_same_universe(const ElementSet& o) const;

  Bits bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// "{a, b, c}" using the ground set's labels.
std::string to_string(const ElementSet& set, const GroundSet& ground);
std::string to_string(const ElementSet& set);

}  // namespace matkit

#endif  // MATKIT_ELEMENT_SET_HPP_
