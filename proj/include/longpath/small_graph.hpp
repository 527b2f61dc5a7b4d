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

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "longpath/error.hpp"
#include "longpath/vertex_set.hpp"

namespace longpath {

using Edge = std::pair<VertexId, VertexId>;
using AdjacencyRows = std::array<Mask, kMaxVertices>;

// Simple undirected graph on at most 16 vertices. Row v of the adjacency is
// the bit set of neighbours of v; rows are kept symmetric and loop-free.
class SmallGraph {
 public:
  SmallGraph() = default;

  explicit SmallGraph(int n) : order_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw Error(ErrorCode::kOrderOutOfRange,
                  "graph order " + std::to_string(n) + " outside [0, 16]");
    }
  }

  SmallGraph(int n, std::span<const Edge> edges) : SmallGraph(n) {
    for (auto [u, v] : edges) connect(u, v);
  }
  SmallGraph(int n, std::initializer_list<Edge> edges)
      : SmallGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Builds from raw rows; validates symmetry, loops and range.
  static SmallGraph from_rows(int n, const AdjacencyRows& rows) {
    SmallGraph g(n);
    const Mask all = full_mask(n);
    for (int v = 0; v < kMaxVertices; ++v) {
      const Mask row = rows[v];
      if (v >= n) {
        if (row != 0) throw Error(ErrorCode::kVertexOutOfRange, "row beyond order");
        continue;
      }
      if ((row & ~all) != 0) {
        throw Error(ErrorCode::kVertexOutOfRange, "neighbour beyond order");
      }
      if ((row & bit(v)) != 0) throw Error(ErrorCode::kInvalidEdge, "loop");
      for (VertexId u : members(row)) {
        if ((rows[u] & bit(v)) == 0) {
          throw Error(ErrorCode::kInvalidEdge, "asymmetric adjacency");
        }
      }
    }
    g.adj_ = rows;
    return g;
  }

  int order() const { return order_; }
  Mask row(VertexId v) const { return adj_[v]; }
  const AdjacencyRows& rows() const { return adj_; }
  VertexSet neighbors(VertexId v) const {
    check_vertex(v);
    return VertexSet(adj_[v], order_);
  }
  VertexSet vertices() const { return VertexSet::full(order_); }
  int degree(VertexId v) const { return popcount(adj_[v]); }
  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & bit(v)) != 0;
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < order_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order_; ++u) {
      for (VertexId v : members(static_cast<Mask>(adj_[u] & ~full_mask(u + 1)))) {
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  SmallGraph with_edge(VertexId u, VertexId v) const {
    SmallGraph g = *this;
    g.connect(u, v);
    return g;
  }

  SmallGraph without_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    SmallGraph g = *this;
    g.adj_[u] = static_cast<Mask>(g.adj_[u] & ~bit(v));
    g.adj_[v] = static_cast<Mask>(g.adj_[v] & ~bit(u));
    return g;
  }

  // Graph with one extra vertex (index = order()) adjacent to `neighbours`.
  SmallGraph with_vertex(Mask neighbours) const {
    if (order_ >= kMaxVertices) {
      throw Error(ErrorCode::kOrderOutOfRange, "cannot grow beyond 16 vertices");
    }
    if ((neighbours & ~full_mask(order_)) != 0) {
      throw Error(ErrorCode::kVertexOutOfRange, "neighbour beyond order");
    }
    SmallGraph g = *this;
    const VertexId fresh = order_;
    g.order_ = order_ + 1;
    g.adj_[fresh] = neighbours;
    for (VertexId u : members(neighbours)) {
      g.adj_[u] = static_cast<Mask>(g.adj_[u] | bit(fresh));
    }
    return g;
  }

  bool operator==(const SmallGraph&) const = default;

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= order_) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside graph of order " +
                      std::to_string(order_));
    }
  }

  void connect(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw Error(ErrorCode::kInvalidEdge, "loop at vertex " + std::to_string(u));
    }
    adj_[u] = static_cast<Mask>(adj_[u] | bit(v));
    adj_[v] = static_cast<Mask>(adj_[v] | bit(u));
  }

  int order_ = 0;
  AdjacencyRows adj_{};
};

inline SmallGraph add_edge(const SmallGraph& g, VertexId u, VertexId v) {
  return g.with_edge(u, v);
}

inline SmallGraph empty_graph(int n) { return SmallGraph(n); }

inline SmallGraph path_graph(int n) {
  SmallGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  return g;
}

inline SmallGraph cycle_graph(int n) {
  SmallGraph g = path_graph(n);
  return n >= 3 ? g.with_edge(n - 1, 0) : g;
}

inline SmallGraph complete_graph(int n) {
  SmallGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v);
  return g;
}

// Star K_{1,leaves} with centre 0.
inline SmallGraph star_graph(int leaves) {
  SmallGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g = g.with_edge(0, v);
  return g;
}

// N(A): every vertex with at least one neighbour in `a`. May intersect `a`.
inline VertexSet neighbors_of_set(const SmallGraph& g, const VertexSet& a) {
  Mask out = 0;
  for (int u = 0; u < g.order(); ++u) {
    if ((g.row(u) & a.bits()) != 0) out = static_cast<Mask>(out | bit(u));
  }
  return VertexSet(out, g.order());
}

// Vertices reachable from `start` using only vertices of `within`.
inline Mask flood_fill(const AdjacencyRows& adj, Mask within, Mask start) {
  Mask seen = static_cast<Mask>(start & within);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (VertexId u : members(frontier)) next = static_cast<Mask>(next | adj[u]);
    frontier = static_cast<Mask>(next & within & ~seen);
    seen = static_cast<Mask>(seen | frontier);
  }
  return seen;
}

inline bool mask_connected(const AdjacencyRows& adj, Mask s) {
  return flood_fill(adj, s, static_cast<Mask>(s & (~s + 1))) == s;
}

// Number of connected components of the subgraph induced by `s`.
inline int component_count(const AdjacencyRows& adj, Mask s) {
  int count = 0;
  while (s != 0) {
    const Mask comp = flood_fill(adj, s, static_cast<Mask>(s & (~s + 1)));
    s = static_cast<Mask>(s & ~comp);
    ++count;
  }
  return count;
}

inline std::vector<Mask> components(const AdjacencyRows& adj, Mask s) {
  std::vector<Mask> out;
  while (s != 0) {
    const Mask comp = flood_fill(adj, s, static_cast<Mask>(s & (~s + 1)));
    s = static_cast<Mask>(s & ~comp);
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected_within(const SmallGraph& g, const VertexSet& s) {
  if (s.empty()) {
    throw Error(ErrorCode::kEmptySet, "connectivity of the empty vertex set is undefined");
  }
  if (!s.is_subset_of(g.vertices())) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex set exceeds graph order");
  }
  return mask_connected(g.rows(), s.bits());
}

inline bool is_connected(const SmallGraph& g) {
  return g.order() == 0 || mask_connected(g.rows(), full_mask(g.order()));
}

struct InducedSubgraph {
  SmallGraph graph;
  std::vector<VertexId> labels;  // new index -> original vertex
};

inline InducedSubgraph induced_subgraph(const SmallGraph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kEmptySet, "induced subgraph of the empty set");
  if (!s.is_subset_of(g.vertices())) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex set exceeds graph order");
  }
  InducedSubgraph out{SmallGraph(s.size()), s.to_vector()};
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < out.labels.size(); ++i) index[out.labels[i]] = static_cast<int>(i);
  AdjacencyRows rows{};
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    for (VertexId u : members(static_cast<Mask>(g.row(out.labels[i]) & s.bits()))) {
      rows[i] = static_cast<Mask>(rows[i] | bit(index[u]));
    }
  }
  out.graph = SmallGraph::from_rows(s.size(), rows);
  return out;
}

// Image of g under `perm` (vertex v of g becomes perm[v]).
inline SmallGraph relabel(const SmallGraph& g, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange, "permutation size differs from graph order");
  }
  Mask image = 0;
  for (VertexId p : perm) {
    if (p < 0 || p >= g.order()) throw Error(ErrorCode::kVertexOutOfRange, "bad permutation");
    image = static_cast<Mask>(image | bit(p));
  }
  if (image != full_mask(g.order())) {
    throw Error(ErrorCode::kVertexOutOfRange, "permutation is not a bijection");
  }
  AdjacencyRows rows{};
  for (int v = 0; v < g.order(); ++v) {
    for (VertexId u : members(g.row(v))) {
      rows[perm[v]] = static_cast<Mask>(rows[perm[v]] | bit(perm[u]));
    }
  }
  return SmallGraph::from_rows(g.order(), rows);
}

// Edge-list text: "n m" then m lines "u v" with 1-based labels. '#' starts a
// comment that runs to end of line. FormatError offsets are 1-based line numbers.
inline SmallGraph read_edge_list(std::istream& in) {
  std::vector<long long> tokens;
  std::vector<std::size_t> token_lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string word;
    while (fields >> word) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(word, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != word.size()) throw FormatError(line_no, "non-integer token '" + word + "'");
      tokens.push_back(value);
      token_lines.push_back(line_no);
    }
  }
  if (tokens.size() < 2) throw FormatError(line_no, "missing 'n m' header");
  const long long n = tokens[0];
  const long long m = tokens[1];
  if (n < 1 || n > kMaxVertices) {
    throw FormatError(token_lines[0], "order " + std::to_string(n) + " outside [1, 16]");
  }
  if (m < 0 || static_cast<long long>(tokens.size()) != 2 + 2 * m) {
    throw FormatError(token_lines.back(), "expected " + std::to_string(m) + " edges");
  }
  SmallGraph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    const long long u = tokens[2 + 2 * e];
    const long long v = tokens[3 + 2 * e];
    const std::size_t at = token_lines[2 + 2 * e];
    if (u < 1 || u > n || v < 1 || v > n) throw FormatError(at, "edge endpoint out of range");
    if (u == v) throw FormatError(at, "loop edge");
    g = g.with_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
  }
  return g;
}

inline SmallGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const SmallGraph& g) {
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace longpath
