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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criteria 2, 3 and 8 drive the command-line tool so that its report
// format is part of what is checked.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "longpath/longpath.hpp"
#include "oracles.hpp"

#ifndef LONGPATH_CLI_PATH
#error "LONGPATH_CLI_PATH must be defined"
#endif

namespace {

using nlohmann::json;
using namespace longpath;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_cli(const std::string& args) {
  const std::string command = std::string(LONGPATH_CLI_PATH) + " " + args + " > /dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  return json::parse(in);
}

int hardware_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Outcome witness_check() {
  const auto start = std::chrono::steady_clock::now();
  const SmallGraph g = builtin_witness();
  if (g.order() != 11 || g.edge_count() != 14) return {false, "builtin graph is not 11 vertices / 14 edges"};
  const WitnessReport report = check_builtin_witness();
  const double elapsed = seconds_since(start);
  const ViolationRecord& v = report.primary();
  std::ostringstream detail;
  detail << "L=" << report.profile.length() << " ell=" << v.ell
         << " complement_size=" << v.complement().size() << " violating_pairs="
         << report.violations.size() << " time=" << elapsed << "s";
  const bool ok = report.profile.order_vertices == 10 && v.ell == 9 && v.complement().size() == 2 &&
                  is_connected_within(g, v.complement()) && elapsed < 1.0;
  return {ok, detail.str()};
}

// Runs `verify --n-max 9` once; criteria 2 and 4 both read its report.
json sweep_up_to_9(const std::filesystem::path& work) {
  const auto report = work / "verify_n1_9.json";
  std::filesystem::remove(report);
  const int code = run_cli("verify --n-max 9 --jobs " + std::to_string(hardware_jobs()) +
                           " --report " + report.string());
  json doc = read_json(report);
  doc["exit_code"] = code;
  return doc;
}

Outcome main_theorem_up_to_9(const json& doc) {
  // Independent class counts: labelled brute force with min-code dedup for
  // n <= 6, Burnside's lemma over labelled graphs at n = 7.
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> classes;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const SmallGraph g = oracle::from_code(n, code);
      if (is_connected(g)) classes.insert(oracle::min_code(g));
    }
    if (classes.size() != count_connected(n)) return {false, "brute-force class count differs at n=" + std::to_string(n)};
  }
  if (oracle::burnside_connected_count(7) != count_connected(7)) return {false, "Burnside count differs at n=7"};

  const std::array<std::uint64_t, 9> expected = {1, 1, 2, 6, 21, 112, 853, 11117, 261080};
  const auto& reports = doc.at("reports");
  if (reports.size() != 9) return {false, "expected 9 reports"};
  std::uint64_t violations = 0;
  std::ostringstream detail;
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& r = reports[i];
    if (r.at("graphs_total").get<std::uint64_t>() != expected[i]) {
      return {false, "n=" + std::to_string(i + 1) + " count " + r.at("graphs_total").dump()};
    }
    if (!r.at("complete").get<bool>()) return {false, "incomplete sweep"};
    violations += r.at("violations").size();
  }
  detail << "graphs=1+1+2+6+21+112+853+11117+261080 violations=" << violations
         << " exit=" << doc.at("exit_code");
  return {violations == 0 && doc.at("all_hold").get<bool>() && doc.at("exit_code") == 0, detail.str()};
}

Outcome main_theorem_at_10(const std::filesystem::path& work) {
  const auto report = work / "verify_n10.json";
  const auto checkpoint = work / "verify_n10.checkpoint.json";
  std::filesystem::remove(report);
  const auto start = std::chrono::steady_clock::now();
  const int code = run_cli("verify --n 10 --jobs " + std::to_string(hardware_jobs()) +
                           " --checkpoint " + checkpoint.string() + " --report " + report.string());
  const json doc = read_json(report);
  const auto& r = doc.at("reports").at(0);
  const auto total = r.at("graphs_total").get<std::uint64_t>();
  const auto violations = r.at("violations").size();
  std::ostringstream detail;
  detail << "graphs=" << total << " reference=" << kConnectedGraphCounts[10]
         << " violations=" << violations << " time=" << seconds_since(start) << "s";
  const bool ok = code == 0 && r.at("complete").get<bool>() && total == 11716571u &&
                  total == kConnectedGraphCounts[10] && violations == 0;
  return {ok, detail.str()};
}

Outcome prior_results(const json& doc) {
  std::uint64_t small_ell_pairs = 0;
  std::uint64_t small_n_pairs = 0;
  for (const auto& r : doc.at("reports")) {
    const int n = r.at("n").get<int>();
    for (const auto& [key, count] : r.at("ell_violations").items()) {
      const int ell = std::stoi(key);
      const auto pairs = r.at("ell_histogram").at(key).get<std::uint64_t>();
      if (ell <= 5) small_ell_pairs += pairs;
      if (n <= 7) small_n_pairs += pairs;
      if (count.get<std::uint64_t>() != 0 && (ell <= 5 || n <= 7)) {
        return {false, "violation at n=" + std::to_string(n) + " ell=" + key};
      }
    }
  }
  if (small_ell_pairs == 0 || small_n_pairs == 0) return {false, "no pairs were examined"};
  return {true, "pairs with ell<=5 (n<=9): " + std::to_string(small_ell_pairs) +
                    ", all pairs at n<=7: " + std::to_string(small_n_pairs) + ", violations=0"};
}

Outcome lemma_catalog() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& catalog : {lemmas::min_distance_catalog(), lemmas::lollipop_catalog(),
                              lemmas::forbidden_pair_catalog()}) {
    for (const auto& c : catalog) {
      ++total;
      failed += c.result.holds ? 0 : 1;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << (total - failed) << "/" << total << " checks hold, time=" << elapsed << "s";
  return {failed == 0 && total > 0 && elapsed < 10.0, detail.str()};
}

bool profiles_agree(LongestPathEngine& engine, const SmallGraph& g) {
  const auto dp = engine.compute(g);
  const auto dfs = oracle::dfs_longest_paths(g);
  if (dp.order_vertices != dfs.order_vertices) return false;
  std::set<unsigned> masks;
  for (const VertexSet& s : dp.sets) masks.insert(s.bits());
  return masks == dfs.sets;
}

Outcome engine_oracle() {
  LongestPathEngine engine;
  std::uint64_t classes = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const SmallGraph& g : enumerate_connected(n)) {
      ++classes;
      if (!profiles_agree(engine, g)) return {false, "mismatch on class " + encode_graph6(g)};
    }
  }
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const double density = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    const SmallGraph g = oracle::random_graph(rng, n, density);
    if (!profiles_agree(engine, g)) return {false, "mismatch on random graph " + encode_graph6(g)};
  }
  return {classes == 143, std::to_string(classes) + " classes and 1000 random graphs match"};
}

Outcome graph6_round_trip() {
  std::uint64_t classes = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const SmallGraph& g : enumerate_connected(n)) {
      ++classes;
      const std::string text = encode_graph6(g);
      if (decode_graph6(text) != g || encode_graph6(decode_graph6(text)) != text) {
        return {false, "round trip failed for " + text};
      }
    }
  }
  const std::vector<std::pair<std::string, std::size_t>> malformed = {
      {"", 0}, {"A", 1}, {"A_?", 2}, {"A`", 1}, {"B ", 1}, {"~", 0}, {"Q", 0}, {"Ch?", 2}};
  for (const auto& [text, offset] : malformed) {
    try {
      decode_graph6(text);
      return {false, "accepted malformed '" + text + "'"};
    } catch (const FormatError& e) {
      if (e.offset() != offset) return {false, "wrong offset for '" + text + "'"};
    }
  }
  return {true, std::to_string(classes) + " classes round-trip, " + std::to_string(malformed.size()) +
                    " malformed inputs rejected with offsets"};
}

std::string strip_wall_time(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.find("\"wall_time\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

Outcome determinism(const std::filesystem::path& work) {
  const auto one = work / "verify_n8_jobs1.json";
  const auto eight = work / "verify_n8_jobs8.json";
  const int a = run_cli("verify --n 8 --jobs 1 --report " + one.string());
  const int b = run_cli("verify --n 8 --jobs 8 --report " + eight.string());
  const std::string ra = strip_wall_time(one);
  const std::string rb = strip_wall_time(eight);
  const bool ok = a == 0 && b == 0 && !ra.empty() && ra == rb;
  return {ok, ok ? "reports identical apart from wall_time (" + std::to_string(ra.size()) + " bytes)"
                 : "reports differ or a run failed"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("acceptance checks");
  bool skip_long = false;
  std::string work_dir = (std::filesystem::temp_directory_path() / "longpath_acceptance").string();
  app.add_flag("--skip-long", skip_long, "skip the n = 10 sweep");
  app.add_option("--work-dir", work_dir, "directory for reports and checkpoints");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(work_dir);
  const std::filesystem::path work(work_dir);

  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << o.detail
              << std::endl;
    failures += o.pass ? 0 : 1;
  };

  json sweep9;
  report(1, "witness", witness_check);
  report(2, "theorem for n<=9", [&] {
    sweep9 = sweep_up_to_9(work);
    return main_theorem_up_to_9(sweep9);
  });
  if (skip_long) {
    std::cout << "SKIP criterion 3 theorem for n=10: --skip-long given" << std::endl;
  } else {
    report(3, "theorem for n=10", [&] { return main_theorem_at_10(work); });
  }
  report(4, "prior results", [&] {
    if (sweep9.is_null()) return Outcome{false, "no n<=9 report"};
    return prior_results(sweep9);
  });
  report(5, "lemma catalog", lemma_catalog);
  report(6, "engine oracle", engine_oracle);
  report(7, "graph6 round trip", graph6_round_trip);
  report(8, "determinism", [&] { return determinism(work); });
  return failures == 0 ? 0 : 1;
}
