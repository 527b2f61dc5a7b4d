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

#include <fstream>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "longpath/canonical.hpp"
#include "longpath/generator.hpp"
#include "longpath/graph6.hpp"
#include "oracles.hpp"

#ifndef LONGPATH_TEST_DATA_DIR
#error "LONGPATH_TEST_DATA_DIR must be defined"
#endif

namespace longpath {
namespace {

TEST(GeneratorTest, CountsMatchReferenceUpTo8) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count_connected(n), kConnectedGraphCounts[static_cast<std::size_t>(n)]) << "n=" << n;
  }
}

TEST(GeneratorTest, CountAt9MatchesReference) { EXPECT_EQ(count_connected(9), 261080u); }

// Brute-force oracle: every labelled graph on n vertices, kept when connected
// and keyed by its minimum edge code over all relabellings.
TEST(GeneratorTest, ClassesMatchLabelledBruteForceUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> brute;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const SmallGraph g = oracle::from_code(n, code);
      if (is_connected(g)) brute.insert(oracle::min_code(g));
    }
    std::set<std::uint64_t> generated;
    for (const SmallGraph& g : enumerate_connected(n)) {
      ASSERT_TRUE(is_connected(g));
      ASSERT_TRUE(generated.insert(oracle::min_code(g)).second) << "duplicate class at n=" << n;
    }
    EXPECT_EQ(generated, brute) << "n=" << n;
  }
}

TEST(GeneratorTest, BurnsideCountAt7) {
  EXPECT_EQ(oracle::burnside_connected_count(7), 853u);
  EXPECT_EQ(count_connected(7), oracle::burnside_connected_count(7));
}

TEST(GeneratorTest, NoDuplicatesUpTo8) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    for_each_connected(n, {}, [&](const SmallGraph& g) {
      ASSERT_TRUE(seen.insert(canonical_form(g)).second) << "duplicate at n=" << n;
    });
  }
}

TEST(GeneratorTest, ShardsPartitionTheOutput) {
  for (int n : {5, 7, 8}) {
    for (int count : {1, 3, 8}) {
      std::multiset<std::string> from_shards;
      for (int id = 0; id < count; ++id) {
        for_each_connected(n, {id, count},
                           [&](const SmallGraph& g) { from_shards.insert(canonical_form(g)); });
      }
      std::multiset<std::string> whole;
      for_each_connected(n, {}, [&](const SmallGraph& g) { whole.insert(canonical_form(g)); });
      EXPECT_EQ(from_shards, whole) << "n=" << n << " shards=" << count;
    }
  }
}

TEST(GeneratorTest, RejectsInvalidArguments) {
  EXPECT_THROW(ConnectedGraphGenerator(0), Error);
  EXPECT_THROW(ConnectedGraphGenerator(11), Error);
  EXPECT_THROW(ConnectedGraphGenerator(5, {3, 3}), Error);
  EXPECT_THROW(ConnectedGraphGenerator(5, {0, 0}), Error);
}

TEST(ExternalSourceTest, Examples) {
  std::istringstream k3("Bw\n");
  EXPECT_EQ(external_source(k3, 3).size(), 1u);

  std::istringstream wrong_order("Bw\n");
  try {
    external_source(wrong_order, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderMismatch);
  }

  std::istringstream disconnected("A?\n");
  try {
    external_source(disconnected, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }

  std::istringstream allowed("A?\n");
  EXPECT_EQ(external_source(allowed, 2, {.require_connected = false}).size(), 1u);
}

// The atlas file lists the 853 connected graphs on 7 vertices as produced by
// an independent graph library.
TEST(ExternalSourceTest, AtlasAt7MatchesGeneratedClasses) {
  std::ifstream in(std::string(LONGPATH_TEST_DATA_DIR) + "/atlas_connected_n7.g6");
  ASSERT_TRUE(in) << "missing atlas file";
  std::set<std::string> external;
  for (const SmallGraph& g : external_source(in, 7)) external.insert(canonical_form(g));
  EXPECT_EQ(external.size(), 853u);
  std::set<std::string> generated;
  for_each_connected(7, {}, [&](const SmallGraph& g) { generated.insert(canonical_form(g)); });
  EXPECT_EQ(generated, external);
}

}  // namespace
}  // namespace longpath
