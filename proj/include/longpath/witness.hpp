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
#include <vector>

#include "longpath/error.hpp"
#include "longpath/longest_path.hpp"
#include "longpath/separator.hpp"
#include "longpath/small_graph.hpp"

namespace longpath {

// The 11-vertex, 14-edge graph with two longest paths (10 vertices each)
// whose 9-vertex intersection leaves a connected complement.
inline SmallGraph builtin_witness() {
  static constexpr std::array<Edge, 14> kEdges = {{{0, 1}, {1, 2}, {1, 4}, {2, 3}, {2, 7},
                                                   {3, 5}, {3, 8}, {4, 6}, {4, 8}, {5, 6},
                                                   {6, 7}, {7, 9}, {8, 9}, {9, 10}}};
  return SmallGraph(11, std::span<const Edge>(kEdges));
}

struct WitnessReport {
  LongestPathProfile profile;
  std::vector<ViolationRecord> violations;  // every violating pair, scan order

  const ViolationRecord& primary() const { return violations.front(); }
};

// Requires at least one pair of longest paths with distinct vertex sets whose
// intersection is not a separator.
inline WitnessReport check_witness(const SmallGraph& g = builtin_witness()) {
  if (!is_connected(g)) throw Error(ErrorCode::kPrecondition, "witness graph must be connected");
  WitnessReport report;
  report.profile = longest_path_profile(g);
  report.violations = find_all_violations(g, report.profile);
  if (report.violations.empty()) {
    throw Error(ErrorCode::kWitnessFailure,
                "no pair of longest paths with a non-separating intersection");
  }
  return report;
}

// Adds the exact expectations for the builtin graph: longest paths of length
// 9, every violating pair at ell = 9 with a connected 2-vertex complement, and
// the pair missing vertices {2, 7} among them.
inline WitnessReport check_builtin_witness() {
  const SmallGraph g = builtin_witness();
  WitnessReport report = check_witness(g);
  if (report.profile.order_vertices != 10) {
    throw Error(ErrorCode::kWitnessFailure, "longest path does not have 10 vertices");
  }
  bool has_2_7 = false;
  for (const auto& v : report.violations) {
    const VertexSet rest = v.complement();
    if (v.ell != 9 || rest.size() != 2 || !is_connected_within(g, rest)) {
      throw Error(ErrorCode::kWitnessFailure, "violating pair differs from ell=9 / 2-vertex complement");
    }
    has_2_7 = has_2_7 || rest == VertexSet({2, 7}, 11);
  }
  if (!has_2_7) throw Error(ErrorCode::kWitnessFailure, "pair with complement {2,7} missing");
  return report;
}

struct TightReduction {
  SmallGraph graph;                 // G1
  std::vector<VertexId> labels;     // G1 vertex -> original vertex
  PathSeq p;                        // P and Q in G1 labels
  PathSeq q;
  VertexId p0 = 0;                  // the vertex of V(P) \ V(Q), G1 label
  VertexId q0 = 0;
  int ell = 0;
};

// Deletes V0 = V \ (V(P) u V(Q)) and joins p0 to q0. Requires P, Q longest
// with one private vertex each; verifies afterwards that P and Q are still
// longest in G1 and that G1 minus their intersection is connected.
inline TightReduction reduce_to_tight_case(const SmallGraph& g, const PathSeq& p, const PathSeq& q) {
  if (!is_valid_path(g, p) || !is_valid_path(g, q)) {
    throw Error(ErrorCode::kPrecondition, "P and Q must be simple paths of g");
  }
  const int longest = longest_path_profile(g).order_vertices;
  if (p.order() != longest || q.order() != longest) {
    throw Error(ErrorCode::kPrecondition, "P and Q must be longest paths of g");
  }
  const Mask vp = p.vertex_mask();
  const Mask vq = q.vertex_mask();
  const Mask only_p = static_cast<Mask>(vp & ~vq);
  const Mask only_q = static_cast<Mask>(vq & ~vp);
  if (popcount(only_p) != 1 || popcount(only_q) != 1) {
    throw Error(ErrorCode::kPrecondition, "need |V(P)\\V(Q)| = |V(Q)\\V(P)| = 1");
  }

  const auto induced = induced_subgraph(g, VertexSet(static_cast<Mask>(vp | vq), g.order()));
  std::array<VertexId, kMaxVertices> to_new{};
  for (std::size_t i = 0; i < induced.labels.size(); ++i) {
    to_new[induced.labels[i]] = static_cast<VertexId>(i);
  }
  TightReduction out;
  out.labels = induced.labels;
  out.p0 = to_new[lowest(only_p)];
  out.q0 = to_new[lowest(only_q)];
  out.graph = induced.graph.with_edge(out.p0, out.q0);
  for (VertexId v : p.vertices) out.p.vertices.push_back(to_new[v]);
  for (VertexId v : q.vertices) out.q.vertices.push_back(to_new[v]);
  out.ell = popcount(static_cast<Mask>(vp & vq));

  if (!is_valid_path(out.graph, out.p) || !is_valid_path(out.graph, out.q)) {
    throw Error(ErrorCode::kPostAssertion, "P or Q is no longer a path in G1");
  }
  if (longest_path_profile(out.graph).order_vertices != longest) {
    throw Error(ErrorCode::kPostAssertion, "P and Q are not longest paths in G1");
  }
  const Mask meet = static_cast<Mask>(out.p.vertex_mask() & out.q.vertex_mask());
  if (is_separator(out.graph, VertexSet(meet, out.graph.order()))) {
    throw Error(ErrorCode::kPostAssertion, "intersection separates G1");
  }
  return out;
}

}  // namespace longpath
