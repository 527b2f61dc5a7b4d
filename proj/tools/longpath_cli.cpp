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

// Command-line driver: verify | witness | analyze | enumerate | count | lemmas.
// Exit codes: 0 all assertions hold, 1 an assertion failed (JSON diagnostics
// on stdout), 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "longpath/longpath.hpp"

namespace {

using nlohmann::json;
using namespace longpath;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::optional<int> n;
  std::optional<int> n_max;
  int jobs = 0;
  int shards = 64;
  std::optional<int> max_shards;
  std::string source = "internal";
  std::string checkpoint;
  std::string report;
  std::string edges;
  std::string g6;
  std::string shard = "0/1";
  std::string out_g6;
  bool all = false;
  bool json_output = false;
  bool remark = false;
  bool lollipop = false;
  bool forbidden = false;
};

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SmallGraph load_graph(const RunConfig& cfg) {
  if (!cfg.edges.empty() && !cfg.g6.empty()) throw UsageError("give either --edges or --g6");
  if (!cfg.g6.empty()) return decode_graph6(cfg.g6);
  if (cfg.edges.empty()) throw UsageError("missing --edges FILE or --g6 STRING");
  std::ifstream in(cfg.edges);
  if (!in) throw UsageError("cannot open " + cfg.edges);
  return read_edge_list(in);
}

json sets_json(const LongestPathProfile& profile) {
  json out = json::array();
  for (const auto& s : profile.sets) out.push_back(one_based(s));
  return out;
}

json path_json(const PathSeq& p) {
  json out = json::array();
  for (VertexId v : p.vertices) out.push_back(v + 1);
  return out;
}

int run_analyze(const RunConfig& cfg) {
  const SmallGraph g = load_graph(cfg);
  LongestPathEngine engine;
  engine.build(g);
  LongestPathProfile profile;
  engine.profile(profile);
  json paths = json::array();
  for (const auto& s : profile.sets) paths.push_back(path_json(engine.reconstruct(s.bits())));
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  const auto violation = find_violating_pair(g, profile);
  json out = {{"n", g.order()},
              {"graph6", encode_graph6(g)},
              {"edges", edges},
              {"connected", is_connected(g)},
              {"longest_length", profile.length()},
              {"longest_order", profile.order_vertices},
              {"sets", sets_json(profile)},
              {"paths", paths},
              {"violation", violation ? to_json(*violation) : json(nullptr)},
              {"ell_histogram", detail::histogram_to_json(min_ell_statistics(g, profile))}};
  std::cout << out.dump(cfg.json_output ? -1 : 2) << '\n';
  return kExitOk;
}

int run_witness(const RunConfig& cfg) {
  const bool builtin = cfg.edges.empty() && cfg.g6.empty();
  try {
    const SmallGraph g = builtin ? builtin_witness() : load_graph(cfg);
    const WitnessReport report = builtin ? check_builtin_witness() : check_witness(g);
    json all = json::array();
    for (const auto& v : report.violations) all.push_back(to_json(v));
    json out = {{"ok", true},
                {"witness", to_json(report.primary())},
                {"longest_length", report.profile.length()},
                {"longest_order", report.profile.order_vertices},
                {"complement", one_based(report.primary().complement())},
                {"violations", all}};
    if (cfg.json_output) {
      std::cout << out.dump() << '\n';
    } else {
      const auto& p = report.primary();
      std::cout << "witness holds: n=" << p.graph.order() << " longest length="
                << report.profile.length() << " (" << report.profile.order_vertices
                << " vertices), ell=" << p.ell << ", connected complement "
                << one_based(p.complement()).dump() << ", " << report.violations.size()
                << " violating pair(s)\n"
                << to_json(p).dump() << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFormat) throw;
    std::cout << json{{"ok", false}, {"error", error_code_name(e.code())}, {"message", e.what()}}.dump()
              << '\n';
    return kExitAssertion;
  }
}

std::filesystem::path checkpoint_for(const RunConfig& cfg, int n, bool ranged) {
  if (!cfg.checkpoint.empty()) {
    return ranged ? std::filesystem::path(cfg.checkpoint + ".n" + std::to_string(n))
                  : std::filesystem::path(cfg.checkpoint);
  }
  const char* dir = std::getenv("LONGPATH_CHECKPOINT_DIR");
  if (dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / ("verify_n" + std::to_string(n) + ".json");
  }
  return {};
}

int run_verify(const RunConfig& cfg) {
  if (!cfg.n && !cfg.n_max) throw UsageError("verify needs --n or --n-max");
  const int hi = cfg.n_max ? *cfg.n_max : *cfg.n;
  const int lo = cfg.n_max ? cfg.n.value_or(1) : *cfg.n;
  if (lo > hi) throw UsageError("--n exceeds --n-max");
  const int jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();

  VerifyOptions options;
  options.jobs = jobs;
  options.shard_count = cfg.shards;
  options.all_violations = cfg.all;
  options.max_shards = cfg.max_shards;
  options.on_violation = [](const ViolationRecord& v) {
    std::cerr << "violation " << to_json(v).dump() << std::endl;
  };

  std::vector<SweepReport> reports;
  if (cfg.source == "internal") {
    if (lo < 1 || hi > kMaxGeneratedOrder) throw UsageError("internal source supports 1 <= n <= 10");
    for (int n = lo; n <= hi; ++n) {
      const auto cp = checkpoint_for(cfg, n, lo != hi);
      options.checkpoint = cp.empty() ? std::nullopt : std::optional(cp);
      reports.push_back(verify_n(n, options));
    }
  } else if (cfg.source.starts_with("g6:")) {
    if (lo != hi) throw UsageError("a graph6 source covers a single --n");
    if (lo < 1 || lo > kMaxVertices) throw UsageError("graph6 source supports 1 <= n <= 16");
    std::ifstream in(cfg.source.substr(3));
    if (!in) throw UsageError("cannot open " + cfg.source.substr(3));
    reports.push_back(verify_stream(in, lo, options));
  } else {
    throw UsageError("--source must be 'internal' or 'g6:FILE'");
  }

  bool ok = true;
  json runs = json::array();
  json failures = json::array();
  for (const auto& r : reports) {
    json j = to_json(r);
    if (!r.complete()) failures.push_back({{"n", r.n}, {"reason", "incomplete"}});
    if (!r.theorem_holds()) failures.push_back({{"n", r.n}, {"reason", "violations"}});
    if (r.source == "internal" && r.complete() &&
        r.graphs_total != kConnectedGraphCounts[static_cast<std::size_t>(r.n)]) {
      failures.push_back({{"n", r.n}, {"reason", "graph count mismatch"}});
    }
    runs.push_back(std::move(j));
  }
  ok = failures.empty();
  const json document = {{"reports", runs}, {"all_hold", ok}, {"failures", failures}};
  if (!cfg.report.empty()) {
    std::ofstream out(cfg.report, std::ios::trunc);
    out << document.dump(2) << '\n';
  }
  if (cfg.json_output) {
    std::cout << document.dump() << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << "n=" << r.n << " graphs=" << r.graphs_total
                << " with_distinct_pairs=" << r.graphs_with_distinct_pairs
                << " violations=" << r.violations.size() << " shards=" << r.shards_done.size()
                << "/" << r.shard_count << " time=" << r.wall_time << "s\n";
    }
    std::cout << (ok ? "theorem holds for every requested n" : failures.dump()) << '\n';
  }
  return ok ? kExitOk : kExitAssertion;
}

GenerationShard parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("--shard expects i/of");
  try {
    return {std::stoi(text.substr(0, slash)), std::stoi(text.substr(slash + 1))};
  } catch (const std::exception&) {
    throw UsageError("--shard expects i/of");
  }
}

int run_enumerate(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("enumerate needs --n");
  const GenerationShard shard = parse_shard(cfg.shard);
  std::ofstream file;
  if (!cfg.out_g6.empty()) {
    file.open(cfg.out_g6, std::ios::trunc);
    if (!file) throw UsageError("cannot write " + cfg.out_g6);
  }
  std::ostream& out = cfg.out_g6.empty() ? std::cout : file;
  const auto count =
      for_each_connected(*cfg.n, shard, [&](const SmallGraph& g) { out << encode_graph6(g) << '\n'; });
  std::cerr << "enumerated " << count << " connected graph(s) on " << *cfg.n << " vertices\n";
  return kExitOk;
}

int run_count(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("count needs --n");
  const auto count = count_connected(*cfg.n);
  const auto expected = kConnectedGraphCounts[static_cast<std::size_t>(*cfg.n)];
  if (cfg.json_output) {
    std::cout << json{{"n", *cfg.n}, {"count", count}, {"expected", expected}}.dump() << '\n';
  } else {
    std::cout << count << '\n';
  }
  return count == expected ? kExitOk : kExitAssertion;
}

int run_lemmas(const RunConfig& cfg) {
  const bool everything = !cfg.remark && !cfg.lollipop && !cfg.forbidden;
  std::vector<lemmas::LemmaCheck> checks;
  auto append = [&](std::vector<lemmas::LemmaCheck> part) {
    checks.insert(checks.end(), part.begin(), part.end());
  };
  if (everything || cfg.remark) append(lemmas::min_distance_catalog());
  if (everything || cfg.lollipop) append(lemmas::lollipop_catalog());
  if (everything || cfg.forbidden) append(lemmas::forbidden_pair_catalog());

  std::size_t failed = 0;
  json rows = json::array();
  for (const auto& c : checks) {
    failed += c.result.holds ? 0 : 1;
    if (cfg.json_output) {
      rows.push_back(lemmas::to_json(c));
    } else {
      std::cout << (c.result.holds ? "PASS " : "FAIL ") << c.lemma << " n=" << c.n;
      if (c.i) std::cout << " i=" << c.i;
      if (c.j) std::cout << " j=" << c.j;
      if (c.k) std::cout << " k=" << c.k;
      std::cout << " " << c.claim << " [" << lemmas::method_name(c.result.method) << "]\n";
    }
  }
  if (cfg.json_output) {
    std::cout << json{{"checks", rows}, {"total", checks.size()}, {"failed", failed}}.dump() << '\n';
  } else {
    std::cout << checks.size() - failed << "/" << checks.size() << " lemma checks hold\n";
  }
  return failed == 0 ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive checks on intersections of two longest paths in small graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "sweep all connected graphs and search for violations");
  verify->add_option("--n", cfg.n, "order (or lower end of the range with --n-max)");
  verify->add_option("--n-max", cfg.n_max, "sweep every order up to this one");
  verify->add_option("--jobs", cfg.jobs, "worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--shards", cfg.shards, "shard count")->check(CLI::PositiveNumber);
  verify->add_option("--max-shards", cfg.max_shards, "stop after this many shards (resume later)");
  verify->add_option("--checkpoint", cfg.checkpoint, "checkpoint file");
  verify->add_option("--report", cfg.report, "write the JSON report here");
  verify->add_option("--source", cfg.source, "internal | g6:FILE");
  verify->add_flag("--all", cfg.all, "record every violating pair");
  verify->add_flag("--json", cfg.json_output, "JSON output");

  auto* witness = app.add_subcommand("witness", "check the 11-vertex witness (or --edges/--g6 graph)");
  witness->add_option("--edges", cfg.edges, "edge-list file");
  witness->add_option("--g6", cfg.g6, "graph6 string");
  witness->add_flag("--json", cfg.json_output, "JSON output");

  auto* analyze = app.add_subcommand("analyze", "longest-path profile of one graph");
  analyze->add_option("--edges", cfg.edges, "edge-list file");
  analyze->add_option("--g6", cfg.g6, "graph6 string");
  analyze->add_flag("--json", cfg.json_output, "compact JSON");

  auto* enumerate = app.add_subcommand("enumerate", "write connected graphs as graph6");
  enumerate->add_option("--n", cfg.n, "order")->required()->check(CLI::Range(1, kMaxGeneratedOrder));
  enumerate->add_option("--shard", cfg.shard, "shard as i/of");
  enumerate->add_option("--out-g6", cfg.out_g6, "output file (default stdout)");

  auto* count = app.add_subcommand("count", "count connected graphs");
  count->add_option("--n", cfg.n, "order")->required()->check(CLI::Range(1, kMaxGeneratedOrder));
  count->add_flag("--json", cfg.json_output, "JSON output");

  auto* lemma = app.add_subcommand("lemmas", "replay the configuration lemmas");
  lemma->add_flag("--remark", cfg.remark, "minimum-distance checks");
  lemma->add_flag("--lollipop", cfg.lollipop, "rewiring checks");
  lemma->add_flag("--forbidden-pairs", cfg.forbidden, "forbidden-pair checks");
  lemma->add_flag("--json", cfg.json_output, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*witness) return run_witness(cfg);
    if (*analyze) return run_analyze(cfg);
    if (*enumerate) return run_enumerate(cfg);
    if (*count) return run_count(cfg);
    if (*lemma) return run_lemmas(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cout << json{{"ok", false}, {"error", error_code_name(e.code())}, {"message", e.what()}}.dump()
              << '\n';
    return kExitAssertion;
  }
  return kExitUsage;
}
