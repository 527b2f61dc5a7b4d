// Copyright 2026 The longpath Authors
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

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "longpath/error.hpp"

namespace longpath {

inline constexpr int kMaxVertices = 16;

using VertexId = int;
using Mask = std::uint16_t;

constexpr Mask bit(VertexId v) { return static_cast<Mask>(1u << v); }
constexpr Mask full_mask(int n) {
  return static_cast<Mask>((std::uint32_t{1} << n) - 1u);
}
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr VertexId lowest(Mask m) { return std::countr_zero(m); }

// Iterates the members of a mask in increasing order.
class MaskRange {
 public:
  class iterator {
   public:
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr VertexId operator*() const { return lowest(rest_); }
    constexpr iterator& operator++() {
      rest_ = static_cast<Mask>(rest_ & (rest_ - 1));
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr explicit MaskRange(Mask m) : mask_(m) {}
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  Mask mask_;
};

constexpr MaskRange members(Mask m) { return MaskRange(m); }

// A subset of {0, ..., universe-1}. Set algebra is exact; complement is taken
// relative to the universe.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr VertexSet(Mask bits, int universe) : bits_(bits), universe_(universe) {
    if (universe < 0 || universe > kMaxVertices) {
      throw Error(ErrorCode::kOrderOutOfRange, "vertex set universe exceeds 16");
    }
    if ((bits & ~full_mask(universe)) != 0) {
      throw Error(ErrorCode::kVertexOutOfRange, "vertex set member outside universe");
    }
  }
  VertexSet(std::initializer_list<VertexId> vs, int universe) : VertexSet(0, universe) {
    for (VertexId v : vs) insert(v);
  }

  static constexpr VertexSet full(int universe) {
    return VertexSet(full_mask(universe), universe);
  }
  static constexpr VertexSet single(VertexId v, int universe) {
    return VertexSet(bit(v), universe);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int universe() const { return universe_; }
  constexpr int size() const { return popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(VertexId v) const {
    return v >= 0 && v < universe_ && ((bits_ >> v) & 1u) != 0;
  }
  constexpr bool is_subset_of(const VertexSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  void insert(VertexId v) {
    check(v);
    bits_ = static_cast<Mask>(bits_ | bit(v));
  }
  void erase(VertexId v) {
    check(v);
    bits_ = static_cast<Mask>(bits_ & ~bit(v));
  }

  constexpr VertexSet complement() const {
    return VertexSet(static_cast<Mask>(~bits_ & full_mask(universe_)), universe_);
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(static_cast<Mask>(a.bits_ | b.bits_), common(a, b));
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(static_cast<Mask>(a.bits_ & b.bits_), common(a, b));
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(static_cast<Mask>(a.bits_ & ~b.bits_), common(a, b));
  }

  constexpr MaskRange::iterator begin() const { return MaskRange(bits_).begin(); }
  constexpr MaskRange::iterator end() const { return MaskRange(bits_).end(); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

  // Ordered by numeric value of the subset, then universe.
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  static constexpr int common(VertexSet a, VertexSet b) {
    return a.universe_ > b.universe_ ? a.universe_ : b.universe_;
  }
  void check(VertexId v) const {
    if (v < 0 || v >= universe_) {
      throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v) +
                                                    " outside universe of size " +
                                                    std::to_string(universe_));
    }
  }

  Mask bits_ = 0;
  int universe_ = 0;
};

}  // namespace longpath
