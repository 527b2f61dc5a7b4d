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

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "longpath/small_graph.hpp"

namespace longpath {

// Vertex permutation; entry v holds the image of v.
using Permutation = std::array<std::uint8_t, kMaxVertices>;

struct CanonicalLabeling {
  int order = 0;
  std::array<std::uint8_t, kMaxVertices> position{};  // vertex -> canonical index
  SmallGraph canonical;
  // Generators of the full automorphism group (empty iff the group is trivial).
  std::vector<Permutation> generators;
  // Smallest vertex of each vertex's automorphism orbit.
  std::array<std::uint8_t, kMaxVertices> orbit{};

  bool trivial_group() const { return generators.empty(); }
  bool same_orbit(VertexId u, VertexId v) const { return orbit[u] == orbit[v]; }
};

namespace detail {

// Individualisation-refinement search. Partitions are refined to equitable
// form by neighbour counts; the canonical graph is the lexicographically
// largest leaf graph. Automorphisms found at leaves prune siblings in the same
// orbit of the pointwise stabiliser of the current prefix, and an automorphism
// mapping the first (or best) leaf returns the search to the branching node.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SmallGraph& g) : adj_(g.rows()), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    out.order = n_;
    if (n_ == 0) {
      out.canonical = SmallGraph(0);
      return out;
    }
    Partition root;
    root.cells[0] = full_mask(n_);
    root.count = 1;
    refine(root, full_mask(n_));
    search(0, root);

    for (int pos = 0; pos < n_; ++pos) out.position[best_.lab[pos]] = static_cast<std::uint8_t>(pos);
    out.canonical = SmallGraph::from_rows(n_, best_.rows);
    out.generators = std::move(generators_);
    std::array<std::uint8_t, kMaxVertices> parent{};
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(v);
    for (const Permutation& gen : out.generators) {
      for (int v = 0; v < n_; ++v) unite(parent, v, gen[v]);
    }
    for (int v = 0; v < n_; ++v) out.orbit[v] = find(parent, v);
    return out;
  }

 private:
  struct Partition {
    std::array<Mask, kMaxVertices> cells{};
    int count = 0;
  };

  struct Leaf {
    std::array<VertexId, kMaxVertices> path{};
    int depth = 0;
    Permutation lab{};  // canonical index -> vertex
    AdjacencyRows rows{};
  };

  static std::uint8_t find(std::array<std::uint8_t, kMaxVertices>& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return static_cast<std::uint8_t>(v);
  }

  // Union keeping the smaller index as root, so roots are orbit minima.
  static void unite(std::array<std::uint8_t, kMaxVertices>& parent, int a, int b) {
    const std::uint8_t ra = find(parent, a);
    const std::uint8_t rb = find(parent, b);
    if (ra < rb) parent[rb] = ra;
    else if (rb < ra) parent[ra] = rb;
  }

  void refine(Partition& p, Mask first_splitter) const {
    std::array<Mask, 4 * kMaxVertices> queue{};
    int head = 0;
    int tail = 0;
    queue[tail++] = first_splitter;
    while (head < tail && p.count < n_) {
      const Mask splitter = queue[head++];
      for (int c = 0; c < p.count; ++c) {
        const Mask cell = p.cells[c];
        if ((cell & (cell - 1)) == 0) continue;
        std::array<Mask, kMaxVertices + 1> bucket{};
        int lo = kMaxVertices + 1;
        int hi = -1;
        for (VertexId v : members(cell)) {
          const int k = popcount(static_cast<Mask>(adj_[v] & splitter));
          bucket[k] = static_cast<Mask>(bucket[k] | bit(v));
          lo = k < lo ? k : lo;
          hi = k > hi ? k : hi;
        }
        if (lo == hi) continue;
        std::array<Mask, kMaxVertices> fragments{};
        int r = 0;
        for (int k = lo; k <= hi; ++k) {
          if (bucket[k] != 0) fragments[r++] = bucket[k];
        }
        for (int t = p.count - 1; t > c; --t) p.cells[t + r - 1] = p.cells[t];
        for (int t = 0; t < r; ++t) {
          p.cells[c + t] = fragments[t];
          queue[tail++] = fragments[t];
        }
        p.count += r - 1;
        c += r - 1;
      }
    }
  }

  void individualize(Partition& p, int cell, VertexId v) const {
    for (int t = p.count - 1; t > cell; --t) p.cells[t + 1] = p.cells[t];
    p.cells[cell + 1] = static_cast<Mask>(p.cells[cell] & ~bit(v));
    p.cells[cell] = bit(v);
    ++p.count;
    refine(p, bit(v));
  }

  // True if v lies in the orbit of an already explored sibling under the
  // known automorphisms that fix path_[0..depth) pointwise.
  bool pruned(int depth, VertexId v, Mask explored) const {
    if (explored == 0 || generators_.empty()) return false;
    std::array<std::uint8_t, kMaxVertices> parent{};
    for (int x = 0; x < n_; ++x) parent[x] = static_cast<std::uint8_t>(x);
    for (const Permutation& gen : generators_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gen[path_[d]] == path_[d];
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) unite(parent, x, gen[x]);
    }
    const std::uint8_t root = find(parent, v);
    for (VertexId u : members(explored)) {
      if (find(parent, u) == root) return true;
    }
    return false;
  }

  // Returns the depth of the node at which the search continues.
  int search(int depth, const Partition& p) {
    if (p.count == n_) return leaf(depth, p);
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    Mask explored = 0;
    for (VertexId v : members(p.cells[target])) {
      if (pruned(depth, v, explored)) continue;
      explored = static_cast<Mask>(explored | bit(v));
      path_[depth] = v;
      Partition child = p;
      individualize(child, target, v);
      const int resume = search(depth + 1, child);
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  static int common_prefix(const std::array<VertexId, kMaxVertices>& a,
                           const std::array<VertexId, kMaxVertices>& b, int len) {
    int c = 0;
    while (c < len && a[c] == b[c]) ++c;
    return c;
  }

  void record_automorphism(const Permutation& from, const Permutation& to) {
    Permutation gen{};
    for (int pos = 0; pos < n_; ++pos) gen[from[pos]] = to[pos];
    generators_.push_back(gen);
  }

  int leaf(int depth, const Partition& p) {
    Leaf cur;
    cur.path = path_;
    cur.depth = depth;
    std::array<std::uint8_t, kMaxVertices> pos{};
    for (int c = 0; c < n_; ++c) {
      const VertexId v = lowest(p.cells[c]);
      cur.lab[c] = static_cast<std::uint8_t>(v);
      pos[v] = static_cast<std::uint8_t>(c);
    }
    for (int v = 0; v < n_; ++v) {
      Mask row = 0;
      for (VertexId u : members(adj_[v])) row = static_cast<Mask>(row | bit(pos[u]));
      cur.rows[pos[v]] = row;
    }
    if (!have_first_) {
      first_ = cur;
      best_ = cur;
      have_first_ = true;
      return depth - 1;
    }
    if (cur.rows == first_.rows) {
      record_automorphism(first_.lab, cur.lab);
      return common_prefix(path_, first_.path, std::min(depth, first_.depth));
    }
    const auto order = cur.rows <=> best_.rows;
    if (order == 0) {
      record_automorphism(best_.lab, cur.lab);
      return common_prefix(path_, best_.path, std::min(depth, best_.depth));
    }
    if (order > 0) best_ = cur;
    return depth - 1;
  }

  AdjacencyRows adj_;
  int n_;
  std::array<VertexId, kMaxVertices> path_{};
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Permutation> generators_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  return detail::CanonicalSearch(g).run();
}

// Isomorphism-invariant byte string: order, then the canonical adjacency rows
// (two bytes each, little end first).
inline std::string canonical_form(const SmallGraph& g) {
  const CanonicalLabeling cl = canonical_labeling(g);
  std::string out;
  out.reserve(1 + 2 * static_cast<std::size_t>(g.order()));
  out.push_back(static_cast<char>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    const Mask row = cl.canonical.row(v);
    out.push_back(static_cast<char>(row & 0xFF));
    out.push_back(static_cast<char>(row >> 8));
  }
  return out;
}

inline bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

inline Mask apply_permutation(const Permutation& perm, Mask set) {
  Mask out = 0;
  for (VertexId v : members(set)) out = static_cast<Mask>(out | bit(perm[v]));
  return out;
}

}  // namespace longpath
