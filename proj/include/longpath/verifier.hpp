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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "longpath/error.hpp"
#include "longpath/generator.hpp"
#include "longpath/graph6.hpp"
#include "longpath/longest_path.hpp"
#include "longpath/separator.hpp"

namespace longpath {

// Commutative partial result of a sweep; shards merge in any order.
struct SweepCounts {
  std::uint64_t graphs_total = 0;
  std::uint64_t graphs_with_distinct_pairs = 0;
  PairStatistics ell_histogram;
  std::vector<ViolationRecord> violations;

  void merge(const SweepCounts& other) {
    graphs_total += other.graphs_total;
    graphs_with_distinct_pairs += other.graphs_with_distinct_pairs;
    ell_histogram.merge(other.ell_histogram);
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

struct SweepReport {
  int n = 0;
  std::string source = "internal";
  std::uint64_t graphs_total = 0;
  std::uint64_t graphs_with_distinct_pairs = 0;
  PairStatistics ell_histogram;
  std::vector<ViolationRecord> violations;
  double wall_time = 0.0;
  int shard_count = 1;
  std::vector<int> shards_done;

  bool complete() const { return static_cast<int>(shards_done.size()) == shard_count; }
  bool theorem_holds() const { return violations.empty(); }
};

struct VerifyOptions {
  int jobs = 1;
  int shard_count = 64;
  // Record every violating pair rather than the first one per graph.
  bool all_violations = false;
  std::optional<std::filesystem::path> checkpoint;
  // Process at most this many pending shards, then return a partial report.
  std::optional<int> max_shards;
  // Invoked (serialised) as soon as a violation is found.
  std::function<void(const ViolationRecord&)> on_violation;
};

// Per-worker state: the longest-path engine and a reusable profile.
class GraphChecker {
 public:
  explicit GraphChecker(bool all_violations) : all_(all_violations) {}

  void check(const SmallGraph& g, SweepCounts& out) {
    engine_.build(g);
    engine_.profile(profile_);
    ++out.graphs_total;
    if (profile_.sets.size() < 2) return;
    ++out.graphs_with_distinct_pairs;
    bool recorded = false;
    counters_.scan(g, profile_, [&](const VertexSet& p, const VertexSet& q,
                                    const detail::PairCheck& check) {
      if (recorded && !all_) return;
      out.violations.push_back(detail::make_record(g, p, q, check));
      recorded = true;
    });
  }

  // Moves the accumulated histogram into `out`.
  void flush(SweepCounts& out) {
    out.ell_histogram.merge(counters_.to_statistics());
    counters_ = EllCounters{};
  }

 private:
  bool all_;
  LongestPathEngine engine_;
  LongestPathProfile profile_;
  EllCounters counters_;
};

inline SweepCounts run_shard(int n, int shard_id, int shard_count, bool all_violations) {
  SweepCounts out;
  GraphChecker checker(all_violations);
  for_each_connected(n, {shard_id, shard_count},
                     [&](const SmallGraph& g) { checker.check(g, out); });
  checker.flush(out);
  return out;
}

namespace detail {

inline bool violation_less(const ViolationRecord& a, const ViolationRecord& b) {
  const std::string ga = encode_graph6(a.graph);
  const std::string gb = encode_graph6(b.graph);
  return std::tie(ga, a.set_p, a.set_q) < std::tie(gb, b.set_p, b.set_q);
}

inline nlohmann::json histogram_to_json(const PairStatistics& stats) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [ell, bucket] : stats.by_ell) {
    out[std::to_string(ell)] = {bucket.pairs, bucket.violations};
  }
  return out;
}

inline PairStatistics histogram_from_json(const nlohmann::json& j) {
  PairStatistics out;
  for (const auto& [key, value] : j.items()) {
    out.by_ell[std::stoi(key)] = {value.at(0).get<std::uint64_t>(), value.at(1).get<std::uint64_t>()};
  }
  return out;
}

}  // namespace detail

// Resumable record of completed shards and their merged partial counts.
struct Checkpoint {
  int n = 0;
  int shard_count = 0;
  std::set<int> completed;
  SweepCounts partial;

  nlohmann::json to_json() const {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : partial.violations) violations.push_back(longpath::to_json(v));
    return {{"n", n},
            {"shard_count", shard_count},
            {"completed", std::vector<int>(completed.begin(), completed.end())},
            {"partial_counts",
             {{"graphs_total", partial.graphs_total},
              {"graphs_with_distinct_pairs", partial.graphs_with_distinct_pairs},
              {"ell_histogram", detail::histogram_to_json(partial.ell_histogram)}}},
            {"partial_violations", violations}};
  }

  static Checkpoint from_json(const nlohmann::json& j) {
    Checkpoint c;
    try {
      c.n = j.at("n").get<int>();
      c.shard_count = j.at("shard_count").get<int>();
      for (const auto& id : j.at("completed")) {
        const int shard = id.get<int>();
        if (shard < 0 || shard >= c.shard_count || !c.completed.insert(shard).second) {
          throw Error(ErrorCode::kCheckpointCorrupt, "invalid completed shard id");
        }
      }
      const auto& counts = j.at("partial_counts");
      c.partial.graphs_total = counts.at("graphs_total").get<std::uint64_t>();
      c.partial.graphs_with_distinct_pairs =
          counts.at("graphs_with_distinct_pairs").get<std::uint64_t>();
      c.partial.ell_histogram = detail::histogram_from_json(counts.at("ell_histogram"));
      for (const auto& v : j.at("partial_violations")) {
        c.partial.violations.push_back(violation_from_json(v));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kCheckpointCorrupt, e.what());
    }
    return c;
  }

  static std::optional<Checkpoint> load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kCheckpointCorrupt, path.string() + ": " + e.what());
    }
    return from_json(j);
  }

  // Write-then-rename so an interrupted write never leaves a torn file.
  void save(const std::filesystem::path& path) const {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << to_json().dump() << '\n';
      if (!out) throw Error(ErrorCode::kCheckpointCorrupt, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }
};

inline SweepReport make_report(int n, const SweepCounts& counts, int shard_count,
                               const std::set<int>& done, double wall_time) {
  SweepReport r;
  r.n = n;
  r.graphs_total = counts.graphs_total;
  r.graphs_with_distinct_pairs = counts.graphs_with_distinct_pairs;
  r.ell_histogram = counts.ell_histogram;
  r.violations = counts.violations;
  std::sort(r.violations.begin(), r.violations.end(), detail::violation_less);
  r.shard_count = shard_count;
  r.shards_done.assign(done.begin(), done.end());
  r.wall_time = wall_time;
  return r;
}

// Sweeps every connected graph on n vertices produced by the internal
// generator. Shards are handed to `jobs` workers; the merged report does not
// depend on the worker count or on completion order.
inline SweepReport verify_n(int n, const VerifyOptions& options = {}) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw Error(ErrorCode::kOrderOutOfRange, "internal sweep supports 1 <= n <= 10");
  }
  if (options.jobs < 1) throw Error(ErrorCode::kPrecondition, "jobs must be >= 1");
  if (options.shard_count < 1) throw Error(ErrorCode::kShardMismatch, "shard_count must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  Checkpoint state{n, options.shard_count, {}, {}};
  if (options.checkpoint) {
    if (auto loaded = Checkpoint::load(*options.checkpoint)) {
      if (loaded->n != n || loaded->shard_count != options.shard_count) {
        throw Error(ErrorCode::kShardMismatch,
                    "checkpoint was written for n=" + std::to_string(loaded->n) +
                        " with " + std::to_string(loaded->shard_count) + " shards");
      }
      state = std::move(*loaded);
    }
  }

  std::vector<int> pending;
  for (int s = 0; s < options.shard_count; ++s) {
    if (!state.completed.contains(s)) pending.push_back(s);
  }
  if (options.max_shards && *options.max_shards < static_cast<int>(pending.size())) {
    pending.resize(static_cast<std::size_t>(std::max(0, *options.max_shards)));
  }

  std::mutex merge_mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= pending.size()) return;
      const int shard = pending[slot];
      SweepCounts counts;
      try {
        counts = run_shard(n, shard, options.shard_count, options.all_violations);
      } catch (...) {
        std::lock_guard lock(merge_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(merge_mutex);
      if (options.on_violation) {
        for (const auto& v : counts.violations) options.on_violation(v);
      }
      state.partial.merge(counts);
      state.completed.insert(shard);
      if (options.checkpoint) state.save(*options.checkpoint);
    }
  };

  const int workers = std::min<int>(options.jobs, std::max<int>(1, static_cast<int>(pending.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return make_report(n, state.partial, options.shard_count, state.completed, elapsed);
}

// Sweeps graph6 records from an external generator (any order up to 16).
// Records are processed in fixed-size batches split across workers.
inline SweepReport verify_stream(std::istream& in, int n, const VerifyOptions& options = {},
                                 ExternalSourceOptions source = {}) {
  if (options.jobs < 1) throw Error(ErrorCode::kPrecondition, "jobs must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  constexpr std::size_t kBatch = 1 << 14;
  const int jobs = options.jobs;
  std::vector<GraphChecker> checkers;
  for (int w = 0; w < jobs; ++w) checkers.emplace_back(options.all_violations);
  std::vector<SweepCounts> partials(static_cast<std::size_t>(jobs));
  SweepCounts total;
  std::vector<SmallGraph> batch;
  batch.reserve(kBatch);

  auto drain = [&] {
    if (batch.empty()) return;
    auto work = [&](int w) {
      for (std::size_t i = static_cast<std::size_t>(w); i < batch.size();
           i += static_cast<std::size_t>(jobs)) {
        checkers[static_cast<std::size_t>(w)].check(batch[i], partials[static_cast<std::size_t>(w)]);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& p : partials) {
      if (options.on_violation) {
        for (const auto& v : p.violations) options.on_violation(v);
      }
      total.merge(p);
      p = SweepCounts{};
    }
    batch.clear();
  };

  for_each_external(in, n, source, [&](const SmallGraph& g) {
    batch.push_back(g);
    if (batch.size() == kBatch) drain();
  });
  drain();
  for (int w = 0; w < jobs; ++w) checkers[static_cast<std::size_t>(w)].flush(total);

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  SweepReport r = make_report(n, total, 1, {0}, elapsed);
  r.source = "graph6";
  return r;
}

inline nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  nlohmann::json hist = nlohmann::json::object();
  nlohmann::json hist_viol = nlohmann::json::object();
  for (const auto& [ell, bucket] : r.ell_histogram.by_ell) {
    hist[std::to_string(ell)] = bucket.pairs;
    hist_viol[std::to_string(ell)] = bucket.violations;
  }
  nlohmann::json out = {{"n", r.n},
                        {"source", r.source},
                        {"graphs_total", r.graphs_total},
                        {"graphs_with_distinct_pairs", r.graphs_with_distinct_pairs},
                        {"ell_histogram", hist},
                        {"ell_violations", hist_viol},
                        {"violations", violations},
                        {"shard_count", r.shard_count},
                        {"shards_done", r.shards_done},
                        {"complete", r.complete()},
                        {"theorem_holds", r.theorem_holds()},
                        {"wall_time", r.wall_time}};
  if (r.source == "internal" && r.n < static_cast<int>(kConnectedGraphCounts.size())) {
    out["expected_total"] = kConnectedGraphCounts[static_cast<std::size_t>(r.n)];
  }
  return out;
}

}  // namespace longpath
