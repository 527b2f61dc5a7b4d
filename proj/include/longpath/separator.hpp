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
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "longpath/error.hpp"
#include "longpath/graph6.hpp"
#include "longpath/longest_path.hpp"
#include "longpath/small_graph.hpp"

namespace longpath {

// W is a separator when G - W is disconnected. The empty complement has no
// defined connectivity and is rejected.
inline bool is_separator(const SmallGraph& g, const VertexSet& w) {
  const Mask rest = static_cast<Mask>(full_mask(g.order()) & ~w.bits());
  if (rest == 0) throw Error(ErrorCode::kEmptyComplement, "separator test with empty complement");
  return !mask_connected(g.rows(), rest);
}

struct ViolationRecord {
  SmallGraph graph;
  VertexSet set_p;
  VertexSet set_q;
  VertexSet intersection;
  int ell = 0;
  int complement_components = 0;

  VertexSet complement() const { return intersection.complement(); }
  bool operator==(const ViolationRecord&) const = default;
};

namespace detail {

// Outcome for one pair of distinct longest-path vertex sets.
struct PairCheck {
  Mask intersection;
  int ell;
  bool violation;
};

inline PairCheck check_pair(const SmallGraph& g, Mask a, Mask b) {
  const Mask meet = static_cast<Mask>(a & b);
  const Mask rest = static_cast<Mask>(full_mask(g.order()) & ~meet);
  if (rest == 0) throw Error(ErrorCode::kEmptyComplement, "distinct sets cannot cover V twice");
  return {meet, popcount(meet), mask_connected(g.rows(), rest)};
}

inline ViolationRecord make_record(const SmallGraph& g, const VertexSet& p, const VertexSet& q,
                                   const PairCheck& check) {
  ViolationRecord r{g, p, q, VertexSet(check.intersection, g.order()), check.ell, 0};
  r.complement_components =
      component_count(g.rows(), static_cast<Mask>(full_mask(g.order()) & ~check.intersection));
  return r;
}

}  // namespace detail

// First pair {S1 < S2} (lexicographic by subset value) from the profile whose
// intersection leaves a connected, nonempty complement.
inline std::optional<ViolationRecord> find_violating_pair(const SmallGraph& g,
                                                          const LongestPathProfile& profile) {
  const auto& sets = profile.sets;
  if (sets.size() < 2) return std::nullopt;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const auto check = detail::check_pair(g, sets[a].bits(), sets[b].bits());
      if (check.violation) return detail::make_record(g, sets[a], sets[b], check);
    }
  }
  return std::nullopt;
}

inline std::vector<ViolationRecord> find_all_violations(const SmallGraph& g,
                                                        const LongestPathProfile& profile) {
  std::vector<ViolationRecord> out;
  const auto& sets = profile.sets;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const auto check = detail::check_pair(g, sets[a].bits(), sets[b].bits());
      if (check.violation) out.push_back(detail::make_record(g, sets[a], sets[b], check));
    }
  }
  return out;
}

struct EllBucket {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  bool operator==(const EllBucket&) const = default;
};

// Distinct-set pairs bucketed by the size of their intersection.
struct PairStatistics {
  std::map<int, EllBucket> by_ell;

  bool has_violation() const {
    for (const auto& [ell, bucket] : by_ell) {
      if (bucket.violations > 0) return true;
    }
    return false;
  }
  std::uint64_t pair_count() const {
    std::uint64_t total = 0;
    for (const auto& [ell, bucket] : by_ell) total += bucket.pairs;
    return total;
  }
  void merge(const PairStatistics& other) {
    for (const auto& [ell, bucket] : other.by_ell) {
      by_ell[ell].pairs += bucket.pairs;
      by_ell[ell].violations += bucket.violations;
    }
  }
  bool operator==(const PairStatistics&) const = default;
};

// Fixed-size accumulator used on the sweep hot path.
struct EllCounters {
  std::array<std::uint64_t, kMaxVertices + 1> pairs{};
  std::array<std::uint64_t, kMaxVertices + 1> violations{};

  template <typename OnViolation>
  bool scan(const SmallGraph& g, const LongestPathProfile& profile, OnViolation&& on_violation) {
    bool any = false;
    const auto& sets = profile.sets;
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = a + 1; b < sets.size(); ++b) {
        const auto check = detail::check_pair(g, sets[a].bits(), sets[b].bits());
        ++pairs[check.ell];
        if (check.violation) {
          ++violations[check.ell];
          on_violation(sets[a], sets[b], check);
          any = true;
        }
      }
    }
    return any;
  }

  PairStatistics to_statistics() const {
    PairStatistics out;
    for (int ell = 0; ell <= kMaxVertices; ++ell) {
      if (pairs[ell] != 0) out.by_ell[ell] = {pairs[ell], violations[ell]};
    }
    return out;
  }
};

inline PairStatistics min_ell_statistics(const SmallGraph& g, const LongestPathProfile& profile) {
  EllCounters counters;
  counters.scan(g, profile, [](const VertexSet&, const VertexSet&, const detail::PairCheck&) {});
  return counters.to_statistics();
}

inline nlohmann::json one_based(const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexId v : s) out.push_back(v + 1);
  return out;
}

inline nlohmann::json to_json(const ViolationRecord& r) {
  return {{"n", r.graph.order()},
          {"graph6", encode_graph6(r.graph)},
          {"set_p", one_based(r.set_p)},
          {"set_q", one_based(r.set_q)},
          {"ell", r.ell}};
}

inline VertexSet vertex_set_from_json(const nlohmann::json& ids, int n) {
  VertexSet s(0, n);
  for (const auto& id : ids) s.insert(id.get<int>() - 1);
  return s;
}

// Rebuilds a record from its JSON form, recomputing every derived field.
inline ViolationRecord violation_from_json(const nlohmann::json& j) {
  const SmallGraph g = decode_graph6(j.at("graph6").get<std::string>());
  if (g.order() != j.at("n").get<int>()) {
    throw Error(ErrorCode::kOrderMismatch, "violation record order does not match graph6");
  }
  const VertexSet p = vertex_set_from_json(j.at("set_p"), g.order());
  const VertexSet q = vertex_set_from_json(j.at("set_q"), g.order());
  const auto check = detail::check_pair(g, p.bits(), q.bits());
  return detail::make_record(g, p, q, check);
}

}  // namespace longpath
