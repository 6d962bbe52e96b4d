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
#include "matkit/element_set.hpp"

#include <algorithm>
#include <iterator>

#include <boost/container_hash/hash.hpp>
#include <boost/iterator/function_output_iterator.hpp>

#include "matkit/errors.hpp"

namespace matkit {

GroundSet::GroundSet(std::vector<std::string> labels)
    : size_(labels.size()), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw DomainError("duplicate ground set label '" + labels_[i] + "'");
    }
  }
}

std::string GroundSet::label(std::size_t element) const {
  if (element >= size_) {
    throw DomainError("element " + std::to_string(element) +
                      " outside ground set of size " + std::to_string(size_));
  }
  return labels_.empty() ? std::to_string(element) : labels_[element];
}

std::optional<std::size_t> GroundSet::find(std::string_view label) const {
  if (labels_.empty()) {
    std::size_t value = 0;
    if (label.empty()) return std::nullopt;
    for (char c : label) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value < size_) return value;
    return std::nullopt;
  }
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet::ElementSet(std::size_t universe,
                       std::initializer_list<std::size_t> members)
    : bits_(universe) {
  for (std::size_t e : members) insert(e);
}

ElementSet::ElementSet(std::size_t universe,
                       const std::vector<std::size_t>& members)
    : bits_(universe) {
  for (std::size_t e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  Bits bits(universe);
  bits.set();
  return ElementSet(std::move(bits));
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) {
    throw DomainError("from_mask needs a universe of at most 64 elements");
  }
  if (universe < 64 && (mask >> universe) != 0) {
    throw DomainError("mask has bits outside the universe");
  }
  return ElementSet(Bits(universe, mask));
}

void ElementSet::insert(std::size_t e) {
  if (e >= bits_.size()) {
    throw DomainError("element " + std::to_string(e) +
                      " outside universe of size " +
                      std::to_string(bits_.size()));
  }
  bits_.set(e);
}

void ElementSet::erase(std::size_t e) {
  if (e < bits_.size()) bits_.reset(e);
}

ElementSet ElementSet::with(std::size_t e) const {
  ElementSet out = *this;
  out.insert(e);
  return out;
}

ElementSet ElementSet::without(std::size_t e) const {
  ElementSet out = *this;
  out.erase(e);
  return out;
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t e) { out.push_back(e); });
  return out;
}

std::uint64_t ElementSet::to_mask() const {
  if (bits_.size() > 64) {
    throw DomainError("to_mask needs a universe of at most 64 elements");
  }
  return bits_.size() == 0 ? 0 : bits_.to_ulong();
}

void ElementSet::require_same_universe(const ElementSet& o) const {
  if (bits_.size() != o.bits_.size()) {
    throw DomainError("element sets over different universes (" +
                      std::to_string(bits_.size()) + " vs " +
                      std::to_string(o.bits_.size()) + ")");
  }
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  require_same_universe(o);
  return ElementSet(bits_ | o.bits_);
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  require_same_universe(o);
  return ElementSet(bits_ & o.bits_);
}

ElementSet ElementSet::operator-(const ElementSet& o) const {
  require_same_universe(o);
  return ElementSet(bits_ - o.bits_);
}

ElementSet ElementSet::complement() const { return ElementSet(~bits_); }

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  require_same_universe(o);
  bits_ |= o.bits_;
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  require_same_universe(o);
  bits_ &= o.bits_;
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& o) {
  require_same_universe(o);
  bits_ -= o.bits_;
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  require_same_universe(o);
  return bits_.is_subset_of(o.bits_);
}

bool ElementSet::intersects(const ElementSet& o) const {
  require_same_universe(o);
  return bits_.intersects(o.bits_);
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& o) const {
  if (auto c = bits_.size() <=> o.bits_.size(); c != 0) return c;
  std::vector<Bits::block_type> a, b;
  boost::to_block_range(bits_, std::back_inserter(a));
  boost::to_block_range(o.bits_, std::back_inserter(b));
  for (std::size_t i = a.size(); i-- > 0;) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSet::hash() const {
  std::size_t seed = bits_.size();
  boost::to_block_range(bits_, boost::make_function_output_iterator(
                                   [&seed](Bits::block_type block) {
                                     boost::hash_combine(seed, block);
                                   }));
  return seed;
}

std::string to_string(const ElementSet& set, const GroundSet& ground) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](std::size_t e) {
    if (!first) out += ", ";
    first = false;
    out += ground.label(e);
  });
  return out + "}";
}

std::string to_string(const ElementSet& set) {
  return to_string(set, GroundSet(set.universe_size()));
}

}  // namespace matkit
