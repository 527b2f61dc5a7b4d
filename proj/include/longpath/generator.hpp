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
#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "longpath/canonical.hpp"
#include "longpath/error.hpp"
#include "longpath/graph6.hpp"
#include "longpath/small_graph.hpp"

namespace longpath {

inline constexpr int kMaxGeneratedOrder = 10;

struct GenerationShard {
  int shard_id = 0;
  int shard_count = 1;
};

namespace detail {

// Vertex invariant used to pick the deletion class before falling back on the
// canonical labelling: (degree, sum of neighbour degrees, edges among
// neighbours), compared lexicographically.
struct VertexInvariant {
  int degree;
  int neighbour_degrees;
  int neighbourhood_edges;
  auto operator<=>(const VertexInvariant&) const = default;
};

inline VertexInvariant vertex_invariant(const AdjacencyRows& adj, VertexId v) {
  VertexInvariant inv{popcount(adj[v]), 0, 0};
  for (VertexId w : members(adj[v])) {
    inv.neighbour_degrees += popcount(adj[w]);
    inv.neighbourhood_edges += popcount(static_cast<Mask>(adj[w] & adj[v]));
  }
  inv.neighbourhood_edges /= 2;
  return inv;
}

}  // namespace detail

// Isomorph-free generation of connected graphs by canonical augmentation.
//
// Every graph on m+1 vertices has a canonical deletion vertex: among the
// vertices maximising VertexInvariant, the one with the largest canonical
// index. A child G + v (v joined to S) is accepted iff v lies in the
// automorphism orbit of that vertex, and S ranges over one representative per
// Aut(G)-orbit of subsets. Intermediate levels hold all graphs, connected or
// not; connectivity is imposed only on the emitted level.
//
// Sharding: graphs reached at split_level(n) are numbered in generation order
// and shard i keeps those with index = i (mod shard_count).
class ConnectedGraphGenerator {
 public:
  ConnectedGraphGenerator(int n, GenerationShard shard = {}) : n_(n), shard_(shard) {
    if (n < 1 || n > kMaxGeneratedOrder) {
      throw Error(ErrorCode::kOrderOutOfRange,
                  "generation supports 1 <= n <= 10, got " + std::to_string(n));
    }
    if (shard.shard_count < 1 || shard.shard_id < 0 || shard.shard_id >= shard.shard_count) {
      throw Error(ErrorCode::kShardMismatch, "shard id must satisfy 0 <= id < count");
    }
  }

  static int split_level(int n) { return n <= 2 ? 1 : (n - 1 < 7 ? n - 1 : 7); }

  // Calls visit(const SmallGraph&) once per isomorphism class in this shard.
  template <typename Visitor>
  std::uint64_t run(Visitor&& visit) {
    emitted_ = 0;
    split_counter_ = 0;
    const SmallGraph root(1);
    if (!owns_subtree(1)) return 0;
    if (n_ == 1) {
      visit(root);
      return ++emitted_;
    }
    descend(root, {}, visit);
    return emitted_;
  }

 private:
  bool owns_subtree(int order) {
    if (order != split_level(n_)) return true;
    const std::uint64_t index = split_counter_++;
    return index % static_cast<std::uint64_t>(shard_.shard_count) ==
           static_cast<std::uint64_t>(shard_.shard_id);
  }

  // One representative subset per orbit of the group generated by `gens`.
  static void orbit_representatives(int m, const std::vector<Permutation>& gens,
                                    std::vector<Mask>& out) {
    out.clear();
    const std::uint32_t count = std::uint32_t{1} << m;
    if (gens.empty()) {
      for (std::uint32_t s = 0; s < count; ++s) out.push_back(static_cast<Mask>(s));
      return;
    }
    std::vector<std::uint8_t> seen(count, 0);
    std::vector<Mask> stack;
    for (std::uint32_t s = 0; s < count; ++s) {
      if (seen[s]) continue;
      out.push_back(static_cast<Mask>(s));
      seen[s] = 1;
      stack.assign(1, static_cast<Mask>(s));
      while (!stack.empty()) {
        const Mask cur = stack.back();
        stack.pop_back();
        for (const Permutation& gen : gens) {
          const Mask img = apply_permutation(gen, cur);
          if (!seen[img]) {
            seen[img] = 1;
            stack.push_back(img);
          }
        }
      }
    }
  }

  enum class Verdict { kReject, kAcceptUnique, kAcceptLabelled };

  // Canonical-deletion test for the newest vertex of `child`. Fills
  // `labelling` when the invariant leaves a tie.
  static Verdict accept(const SmallGraph& child, CanonicalLabeling& labelling) {
    const int order = child.order();
    const VertexId fresh = order - 1;
    const AdjacencyRows& adj = child.rows();
    const detail::VertexInvariant mine = detail::vertex_invariant(adj, fresh);
    Mask ties = bit(fresh);
    for (VertexId u = 0; u < fresh; ++u) {
      if (popcount(adj[u]) < mine.degree) continue;
      if (popcount(adj[u]) > mine.degree) return Verdict::kReject;
      const auto other = detail::vertex_invariant(adj, u);
      if (other > mine) return Verdict::kReject;
      if (other == mine) ties = static_cast<Mask>(ties | bit(u));
    }
    if (ties == bit(fresh)) return Verdict::kAcceptUnique;
    labelling = canonical_labeling(child);
    VertexId chosen = fresh;
    for (VertexId u : members(ties)) {
      if (labelling.position[u] > labelling.position[chosen]) chosen = u;
    }
    return labelling.same_orbit(chosen, fresh) ? Verdict::kAcceptLabelled : Verdict::kReject;
  }

  template <typename Visitor>
  void descend(const SmallGraph& g, const std::vector<Permutation>& gens, Visitor& visit) {
    const int m = g.order();
    const bool last = m + 1 == n_;
    std::vector<Mask> subsets;
    orbit_representatives(m, gens, subsets);

    // Fast degree screen: the new vertex needs the maximum degree.
    int top_degree = 0;
    for (int u = 0; u < m; ++u) top_degree = std::max(top_degree, g.degree(u));
    Mask top = 0;
    for (int u = 0; u < m; ++u) {
      if (g.degree(u) == top_degree) top = static_cast<Mask>(top | bit(u));
    }
    std::vector<Mask> parts;
    if (last) parts = components(g.rows(), full_mask(m));

    CanonicalLabeling labelling;
    for (const Mask s : subsets) {
      const int d = popcount(s);
      if (d < top_degree || ((s & top) != 0 && d == top_degree)) continue;
      if (last) {
        bool joins_all = true;
        for (const Mask part : parts) joins_all = joins_all && (part & s) != 0;
        if (!joins_all) continue;
      }
      const SmallGraph child = g.with_vertex(s);
      const Verdict verdict = accept(child, labelling);
      if (verdict == Verdict::kReject) continue;
      if (last) {
        ++emitted_;
        visit(child);
        continue;
      }
      if (!owns_subtree(m + 1)) continue;
      if (verdict == Verdict::kAcceptUnique) labelling = canonical_labeling(child);
      descend(child, labelling.generators, visit);
    }
  }

  int n_;
  GenerationShard shard_;
  std::uint64_t emitted_ = 0;
  std::uint64_t split_counter_ = 0;
};

template <typename Visitor>
std::uint64_t for_each_connected(int n, GenerationShard shard, Visitor&& visit) {
  ConnectedGraphGenerator gen(n, shard);
  return gen.run(visit);
}

inline std::vector<SmallGraph> enumerate_connected(int n, GenerationShard shard = {}) {
  std::vector<SmallGraph> out;
  for_each_connected(n, shard, [&](const SmallGraph& g) { out.push_back(g); });
  return out;
}

inline std::uint64_t count_connected(int n) {
  return for_each_connected(n, {}, [](const SmallGraph&) {});
}

// Reference values (OEIS A001349) for the number of connected graphs.
inline constexpr std::array<std::uint64_t, 12> kConnectedGraphCounts = {
    1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571, 1006700565};

struct ExternalSourceOptions {
  bool require_connected = true;
};

// Streams graph6 records, checking order and (optionally) connectivity.
template <typename Visitor>
std::uint64_t for_each_external(std::istream& in, int expected_n, ExternalSourceOptions options,
                                Visitor&& visit) {
  std::uint64_t index = 0;
  return for_each_graph6(in, [&](const SmallGraph& g) {
    ++index;
    if (g.order() != expected_n) {
      throw Error(ErrorCode::kOrderMismatch, "record " + std::to_string(index) + " has order " +
                                                 std::to_string(g.order()) + ", expected " +
                                                 std::to_string(expected_n));
    }
    if (options.require_connected && !is_connected(g)) {
      throw Error(ErrorCode::kDisconnected,
                  "record " + std::to_string(index) + " is not connected");
    }
    visit(g);
  });
}

inline std::vector<SmallGraph> external_source(std::istream& in, int expected_n,
                                               ExternalSourceOptions options = {}) {
  std::vector<SmallGraph> out;
  for_each_external(in, expected_n, options, [&](const SmallGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace longpath
