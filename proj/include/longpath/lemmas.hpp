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
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "longpath/error.hpp"
#include "longpath/longest_path.hpp"
#include "longpath/small_graph.hpp"

namespace longpath::lemmas {

// Configuration graphs live on n vertices: p_1..p_{n-1} (a longest path P,
// vertex p_t stored as t-1) and one extra vertex q (stored as n-1). Pairs
// and positions below use the 1-based p indices.
using PPair = std::pair<int, int>;

inline VertexId p_vertex(int t) { return t - 1; }
inline VertexId q_vertex(int n) { return n - 1; }

inline constexpr int kMinConfigOrder = 8;
inline constexpr int kMaxConfigOrder = 10;

struct CaseConfig {
  int n = 0;
  int i = 0;  // the vertex of V(P) \ V(Q)
  int j = 0;  // q's neighbours on P, j < k
  int k = 0;
  std::vector<PPair> extra_edges;
};

// Path p_1..p_{n-1}, q joined to `q_neighbours`, plus `extra` edges.
inline SmallGraph configuration_graph(int n, const std::vector<int>& q_neighbours,
                                      const std::vector<PPair>& extra = {}) {
  SmallGraph g(n);
  for (int t = 1; t + 1 <= n - 1; ++t) g = g.with_edge(p_vertex(t), p_vertex(t + 1));
  for (int t : q_neighbours) g = g.with_edge(q_vertex(n), p_vertex(t));
  for (auto [a, b] : extra) {
    if (a < 1 || b < 1 || a > n - 1 || b > n - 1 || a == b) {
      throw Error(ErrorCode::kInvalidConfig, "extra edge outside p_1..p_{n-1}");
    }
    if (g.has_edge(p_vertex(a), p_vertex(b))) {
      throw Error(ErrorCode::kInvalidConfig, "extra edge duplicates an existing edge");
    }
    g = g.with_edge(p_vertex(a), p_vertex(b));
  }
  return g;
}

// 1 < i < n-1, 1 < j < k < n-1, and i, j, k pairwise more than 1 apart.
inline bool admissible(int n, int i, int j, int k) {
  return n >= kMinConfigOrder && n <= kMaxConfigOrder && 1 < i && i < n - 1 && 1 < j && j < k &&
         k < n - 1 && std::abs(i - j) > 1 && std::abs(k - i) > 1 && std::abs(k - j) > 1;
}

inline SmallGraph build_config(const CaseConfig& c) {
  if (!admissible(c.n, c.i, c.j, c.k)) {
    throw Error(ErrorCode::kInvalidConfig,
                "(n,i,j,k) = (" + std::to_string(c.n) + "," + std::to_string(c.i) + "," +
                    std::to_string(c.j) + "," + std::to_string(c.k) + ") is not admissible");
  }
  return configuration_graph(c.n, {c.i, c.j, c.k}, c.extra_edges);
}

struct ForbiddenPair {
  int item = 0;      // 1..4
  std::string rule;  // which clause of the item produced the pair
  PPair pair;
};

// Every pair claimed forbidden for the tuple (n, i, j, k).
inline std::vector<ForbiddenPair> forbidden_pairs(int n, int i, int j, int k) {
  std::vector<ForbiddenPair> out = {
      {1, "(p_{i-1},p_{i+1})", {i - 1, i + 1}},
      {1, "(p_1,p_{n-1})", {1, n - 1}},
      {1, "(p_1,p_{i+1})", {1, i + 1}},
      {1, "(p_{i-1},p_{n-1})", {i - 1, n - 1}},
  };
  for (const auto& [x, name] : {std::pair{j, std::string("j")}, std::pair{k, std::string("k")}}) {
    out.push_back({2, "x=" + name + ": (p_1,p_{x+1})", {1, x + 1}});
    out.push_back({2, "x=" + name + ": (p_{x-1},p_{n-1})", {x - 1, n - 1}});
    out.push_back({2, "x=" + name + ": (p_{i-1},p_{x-1})", {i - 1, x - 1}});
    out.push_back({2, "x=" + name + ": (p_{i+1},p_{x+1})", {i + 1, x + 1}});
    if (x > i) out.push_back({3, "x=" + name + ">i: (p_1,p_{x-1})", {1, x - 1}});
    if (x < i) out.push_back({3, "x=" + name + "<i: (p_{x+1},p_{n-1})", {x + 1, n - 1}});
  }
  if (j < i) out.push_back({4, "j<i: (p_1,p_{i-1})", {1, i - 1}});
  if (k > i) out.push_back({4, "k>i: (p_{i+1},p_{n-1})", {i + 1, n - 1}});
  return out;
}

enum class Method {
  kHamiltonianPath,  // the configuration graph is traceable
  kSplice,           // Q's edge (a, b) is replaced by a - p_i - b
  kExplicitPath,     // an explicit sequence is checked
  kNone,
};

inline std::string method_name(Method m) {
  switch (m) {
    case Method::kHamiltonianPath: return "hamiltonian-path";
    case Method::kSplice: return "splice";
    case Method::kExplicitPath: return "explicit-path";
    case Method::kNone: return "none";
  }
  return "none";
}

struct ReplayResult {
  bool holds = false;
  Method method = Method::kNone;
  PathSeq witness;  // in configuration-graph vertex ids
};

namespace detail {

inline ReplayResult hamiltonian(const SmallGraph& g) {
  LongestPathEngine engine;
  engine.build(g);
  if (engine.longest_order() != g.order()) return {};
  return {true, Method::kHamiltonianPath, engine.reconstruct(full_mask(g.order()))};
}

}  // namespace detail

// The extra edge must be one of the pairs claimed for (n, i, j, k). The
// contradiction is a Hamiltonian path in path + {q p_i, q p_j, q p_k} + edge.
// For (p_{i-1}, p_{i+1}) the claimed contradiction is instead that Q, which
// avoids p_i, would use the edge and could be lengthened through p_i; when no
// Hamiltonian path exists that splice is what gets checked.
inline ReplayResult replay_forbidden_pair(const CaseConfig& c) {
  if (c.extra_edges.size() != 1) {
    throw Error(ErrorCode::kNotAClaim, "forbidden-pair replay needs exactly one candidate edge");
  }
  const SmallGraph g = build_config(c);
  const auto [a, b] = c.extra_edges.front();
  const auto claims = forbidden_pairs(c.n, c.i, c.j, c.k);
  const bool claimed = std::any_of(claims.begin(), claims.end(), [&](const ForbiddenPair& f) {
    return (f.pair.first == a && f.pair.second == b) || (f.pair.first == b && f.pair.second == a);
  });
  if (!claimed) {
    throw Error(ErrorCode::kNotAClaim, "pair (p_" + std::to_string(a) + ",p_" + std::to_string(b) +
                                           ") is not listed for this configuration");
  }
  if (ReplayResult r = detail::hamiltonian(g); r.holds) return r;
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  if (lo == c.i - 1 && hi == c.i + 1) {
    const VertexId mid = p_vertex(c.i);
    const bool detour = g.has_edge(p_vertex(lo), mid) && g.has_edge(mid, p_vertex(hi));
    PathSeq through{{p_vertex(lo), mid, p_vertex(hi)}};
    return {detour && is_valid_path(g, through), Method::kSplice, through};
  }
  return {};
}

// q adjacent to two consecutive path vertices p_a, p_b: inserting q between
// them gives a Hamiltonian path.
inline ReplayResult replay_min_distance(int n, int a, int b) {
  if (std::abs(a - b) != 1) throw Error(ErrorCode::kNotAClaim, "claim concerns |a-b| = 1 only");
  if (n < kMinConfigOrder || n > kMaxConfigOrder || a <= 1 || b <= 1 || a >= n - 1 ||
      b >= n - 1) {
    throw Error(ErrorCode::kInvalidConfig, "positions must satisfy 1 < a, b < n-1");
  }
  return detail::hamiltonian(configuration_graph(n, {a, b}));
}

struct LollipopResult {
  bool holds = false;
  PathSeq rewired;  // p_{k-1} ... p_3 p_2 q p_k ... p_{n-1}
};

// With P' = {p_2} and q adjacent to p_2, p_j, p_k, the rewired path must be a
// longest path of the configuration on n-1 vertices that still misses p_1,
// with p_2 at neither the second nor the second-to-last position.
inline LollipopResult replay_lollipop(int n, int j, int k) {
  if (k <= 5) throw Error(ErrorCode::kNotAClaim, "rewiring requires k > 5");
  if (!admissible(n, 2, j, k)) throw Error(ErrorCode::kInvalidConfig, "inadmissible (n, 2, j, k)");
  const SmallGraph g = build_config({n, 2, j, k, {}});
  LollipopResult out;
  for (int t = k - 1; t >= 2; --t) out.rewired.vertices.push_back(p_vertex(t));
  out.rewired.vertices.push_back(q_vertex(n));
  for (int t = k; t <= n - 1; ++t) out.rewired.vertices.push_back(p_vertex(t));

  const auto& seq = out.rewired.vertices;
  const auto at = std::find(seq.begin(), seq.end(), p_vertex(2));
  const int position = static_cast<int>(at - seq.begin()) + 1;
  const Mask outside = static_cast<Mask>(full_mask(n) & ~out.rewired.vertex_mask());
  const bool valid = is_valid_path(g, out.rewired) && out.rewired.order() == n - 1;
  const bool longest = longest_path_profile(g).order_vertices == n - 1;
  const bool misses_p1 = outside == bit(p_vertex(1));
  // Complement of V(P~) n V(Q) is {p_1, p_2}, joined by a path edge.
  const bool joined = g.has_edge(p_vertex(1), p_vertex(2));
  out.holds = valid && longest && misses_p1 && joined && at != seq.end() && position != 2 &&
              position != n - 2;
  return out;
}

struct LemmaCheck {
  std::string lemma;
  int n = 0;
  int i = 0;
  int j = 0;
  int k = 0;
  int item = 0;
  std::string claim;
  PPair pair{0, 0};
  ReplayResult result;
};

// |i-j| = 1, |k-i| = 1 and |k-j| = 1 each let q be inserted into P.
inline std::vector<LemmaCheck> min_distance_catalog() {
  std::vector<LemmaCheck> out;
  for (int n = kMinConfigOrder; n <= kMaxConfigOrder; ++n) {
    for (int a = 2; a <= n - 2; ++a) {
      for (int b : {a - 1, a + 1}) {
        if (b < 2 || b > n - 2) continue;
        for (const char* role : {"|i-j|=1", "|k-i|=1"}) {
          out.push_back({"min-distance", n, a, 0, 0, 0, role, {a, b}, replay_min_distance(n, a, b)});
        }
        if (b == a + 1) {
          out.push_back({"min-distance", n, 0, a, b, 0, "|k-j|=1", {a, b}, replay_min_distance(n, a, b)});
        }
      }
    }
  }
  return out;
}

inline std::vector<LemmaCheck> lollipop_catalog() {
  std::vector<LemmaCheck> out;
  for (int n = kMinConfigOrder; n <= kMaxConfigOrder; ++n) {
    for (int j = 2; j < n - 1; ++j) {
      for (int k = j + 1; k < n - 1; ++k) {
        if (k <= 5 || !admissible(n, 2, j, k)) continue;
        const LollipopResult r = replay_lollipop(n, j, k);
        out.push_back({"lollipop", n, 2, j, k, 0, "rewired path", {0, 0},
                       {r.holds, Method::kExplicitPath, r.rewired}});
      }
    }
  }
  return out;
}

inline std::vector<LemmaCheck> forbidden_pair_catalog() {
  std::vector<LemmaCheck> out;
  for (int n = kMinConfigOrder; n <= kMaxConfigOrder; ++n) {
    for (int i = 2; i <= n - 2; ++i) {
      for (int j = 2; j < n - 1; ++j) {
        for (int k = j + 1; k < n - 1; ++k) {
          if (!admissible(n, i, j, k)) continue;
          for (const ForbiddenPair& f : forbidden_pairs(n, i, j, k)) {
            CaseConfig c{n, i, j, k, {f.pair}};
            out.push_back({"forbidden-pair", n, i, j, k, f.item, f.rule, f.pair,
                           replay_forbidden_pair(c)});
          }
        }
      }
    }
  }
  return out;
}

inline nlohmann::json to_json(const LemmaCheck& c) {
  nlohmann::json witness = nlohmann::json::array();
  for (VertexId v : c.result.witness.vertices) {
    // Report vertices by name: p_t or q.
    witness.push_back(v == q_vertex(c.n) ? std::string("q") : "p_" + std::to_string(v + 1));
  }
  nlohmann::json out = {{"lemma", c.lemma}, {"n", c.n},      {"claim", c.claim},
                        {"holds", c.result.holds}, {"method", method_name(c.result.method)},
                        {"witness", witness}};
  if (c.i) out["i"] = c.i;
  if (c.j) out["j"] = c.j;
  if (c.k) out["k"] = c.k;
  if (c.item) out["item"] = c.item;
  if (c.pair.first) out["pair"] = {c.pair.first, c.pair.second};
  return out;
}

}  // namespace longpath::lemmas
