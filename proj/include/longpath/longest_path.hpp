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
#include <bit>
#include <cstdint>
#include <vector>

#include "longpath/error.hpp"
#include "longpath/small_graph.hpp"

namespace longpath {

// A simple path given by its vertex sequence. Length counts edges.
struct PathSeq {
  std::vector<VertexId> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  int length() const { return vertices.empty() ? 0 : order() - 1; }
  Mask vertex_mask() const {
    Mask m = 0;
    for (VertexId v : vertices) m = static_cast<Mask>(m | bit(v));
    return m;
  }
  bool operator==(const PathSeq&) const = default;
};

// Distinct vertices, each consecutive pair adjacent in g.
inline bool is_valid_path(const SmallGraph& g, const PathSeq& p) {
  Mask seen = 0;
  for (std::size_t t = 0; t < p.vertices.size(); ++t) {
    const VertexId v = p.vertices[t];
    if (v < 0 || v >= g.order() || (seen & bit(v)) != 0) return false;
    seen = static_cast<Mask>(seen | bit(v));
    if (t > 0 && (g.row(p.vertices[t - 1]) & bit(v)) == 0) return false;
  }
  return true;
}

inline int path_distance(const PathSeq& p, VertexId u, VertexId v) {
  const auto pu = std::find(p.vertices.begin(), p.vertices.end(), u);
  const auto pv = std::find(p.vertices.begin(), p.vertices.end(), v);
  if (pu == p.vertices.end() || pv == p.vertices.end()) {
    throw Error(ErrorCode::kNotOnPath, "vertex not on path");
  }
  return static_cast<int>(pu > pv ? pu - pv : pv - pu);
}

struct LongestPathProfile {
  int order_vertices = 0;  // vertices on a longest path
  // Vertex sets of longest paths, ascending by numeric subset value.
  std::vector<VertexSet> sets;

  int length() const { return order_vertices > 0 ? order_vertices - 1 : 0; }
  bool operator==(const LongestPathProfile&) const = default;
};

// Subset DP: end(S) is the set of vertices v in S such that some simple path
// visits exactly S and ends at v. The table is filled forward in increasing
// numeric order of S, so end(S) is final when S is reached. One engine per
// worker; the table is reused across graphs.
class LongestPathEngine {
 public:
  LongestPathEngine() = default;

  void build(const SmallGraph& g) {
    graph_ = g;
    const int n = g.order();
    const std::size_t size = std::size_t{1} << n;
    if (end_.size() < size) end_.resize(size);
    std::fill_n(end_.begin(), size, Mask{0});
    for (int v = 0; v < n; ++v) end_[bit(v)] = bit(v);
    // reach_[m]: union of the neighbourhoods of the vertices in m.
    if (reach_.size() < size) reach_.resize(size);
    reach_[0] = 0;
    for (std::size_t m = 1; m < size; ++m) {
      reach_[m] = static_cast<Mask>(reach_[m & (m - 1)] | g.row(std::countr_zero(m)));
    }
    best_ = n > 0 ? 1 : 0;
    for (std::size_t s = 1; s < size; ++s) {
      const Mask ends = end_[s];
      if (ends == 0) continue;
      const Mask reach = static_cast<Mask>(reach_[ends] & ~s);
      if (reach == 0) continue;
      const int grown = popcount(static_cast<Mask>(s)) + 1;
      if (grown > best_) best_ = grown;
      for (VertexId v : members(reach)) {
        Mask& slot = end_[s | bit(v)];
        slot = static_cast<Mask>(slot | bit(v));
      }
    }
  }

  // Requires a prior build().
  void profile(LongestPathProfile& out) const {
    out.order_vertices = best_;
    out.sets.clear();
    const int n = graph_.order();
    if (n == 0) return;
    const std::size_t size = std::size_t{1} << n;
    for (std::size_t s = 1; s < size; ++s) {
      if (end_[s] != 0 && popcount(static_cast<Mask>(s)) == best_) {
        out.sets.emplace_back(static_cast<Mask>(s), n);
      }
    }
  }

  LongestPathProfile compute(const SmallGraph& g) {
    build(g);
    LongestPathProfile out;
    profile(out);
    return out;
  }

  int longest_order() const { return best_; }
  Mask endpoints(Mask s) const { return end_[s]; }
  const SmallGraph& graph() const { return graph_; }

  // Path visiting exactly s, ending at the lowest valid endpoint; each step
  // back picks the lowest predecessor with a path on the remaining set.
  PathSeq reconstruct(Mask s) const {
    if (s == 0 || (s & ~full_mask(graph_.order())) != 0 || end_[s] == 0) {
      throw Error(ErrorCode::kNoPath, "no simple path spans the requested vertex set");
    }
    PathSeq p;
    VertexId last = lowest(end_[s]);
    Mask rest = s;
    while (true) {
      p.vertices.push_back(last);
      rest = static_cast<Mask>(rest & ~bit(last));
      if (rest == 0) break;
      last = lowest(static_cast<Mask>(end_[rest] & graph_.row(last)));
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }

 private:
  SmallGraph graph_;
  std::vector<Mask> end_;
  std::vector<Mask> reach_;
  int best_ = 0;
};

inline LongestPathProfile longest_path_profile(const SmallGraph& g) {
  return LongestPathEngine().compute(g);
}

inline PathSeq reconstruct_path(const SmallGraph& g, const VertexSet& s) {
  LongestPathEngine engine;
  engine.build(g);
  return engine.reconstruct(s.bits());
}

inline bool hamiltonian_path_exists(const SmallGraph& g) {
  LongestPathEngine engine;
  engine.build(g);
  return engine.longest_order() == g.order();
}

}  // namespace longpath
