// Copyright 2026 The atomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "atomlab/errors.hpp"

namespace atomlab {

/// A subset of the vertex universe [0, n), stored as a bitset.
///
/// Every set-valued quantity in the library (images, boundaries,
/// fragments, atoms) is a VertexSet. Two sets are only comparable or
/// combinable when they share the same universe size.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe_size)
      : universe_(universe_size),
        bits_(static_cast<std::size_t>((universe_size + 63) / 64), 0) {
    if (universe_size < 0) {
      throw domain_error("VertexSet: universe size must be nonnegative");
    }
  }

  static VertexSet of(int universe_size, std::initializer_list<int> members) {
    VertexSet s(universe_size);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe_size) {
    VertexSet s(universe_size);
    for (int v = 0; v < universe_size; ++v) s.insert(v);
    return s;
  }

  int universe_size() const { return universe_; }

  bool contains(int v) const {
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void insert(int v) {
    check_vertex(v);
    bits_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check_vertex(v);
    bits_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : bits_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_full() const { return count() == universe_; }

  /// Least member, or -1 when empty.
  int least() const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] != 0) {
        return static_cast<int>(i * 64) + std::countr_zero(bits_[i]);
      }
    }
    return -1;
  }

  /// Members in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & o.bits_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & ~o.bits_[i]) return false;
    }
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && bits_ == o.bits_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  /// Visits members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w != 0) {
        int v = static_cast<int>(i * 64) + std::countr_zero(w);
        f(v);
        w &= w - 1;
      }
    }
  }

  /// Lexicographic order on the sorted member lists; used for
  /// deterministic witness tie-breaking.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    a.check_same_universe(b);
    const std::vector<int> ma = a.members();
    const std::vector<int> mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                        mb.end());
  }

  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= universe_) {
      throw domain_error("VertexSet: vertex " + std::to_string(v) +
                         " outside universe [0, " + std::to_string(universe_) +
                         ")");
    }
  }

  void check_same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_) {
      throw domain_error("VertexSet: universe mismatch (" +
                         std::to_string(universe_) + " vs " +
                         std::to_string(o.universe_) + ")");
    }
  }

  int universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace atomlab
