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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "longpath/canonical.hpp"
#include "longpath/generator.hpp"
#include "longpath/longest_path.hpp"
#include "longpath/witness.hpp"
#include "oracles.hpp"

namespace longpath {
namespace {

std::set<unsigned> as_masks(const LongestPathProfile& p) {
  std::set<unsigned> out;
  for (const VertexSet& s : p.sets) out.insert(s.bits());
  return out;
}

TEST(LongestPathTest, Examples) {
  const auto p4 = longest_path_profile(path_graph(4));
  EXPECT_EQ(p4.length(), 3);
  ASSERT_EQ(p4.sets.size(), 1u);
  EXPECT_EQ(p4.sets[0], VertexSet::full(4));

  const auto c4 = longest_path_profile(cycle_graph(4));
  EXPECT_EQ(c4.length(), 3);
  EXPECT_EQ(c4.sets.size(), 1u);

  const auto star = longest_path_profile(star_graph(3));
  EXPECT_EQ(star.length(), 2);
  EXPECT_EQ(star.sets.size(), 3u);

  const auto k1 = longest_path_profile(empty_graph(1));
  EXPECT_EQ(k1.length(), 0);
  EXPECT_EQ(k1.sets.size(), 1u);
}

TEST(LongestPathTest, WitnessHasSevenLongestSets) {
  const auto w = longest_path_profile(builtin_witness());
  EXPECT_EQ(w.length(), 9);
  EXPECT_EQ(w.sets.size(), 7u);
}

TEST(LongestPathTest, SetsAreAscending) {
  const auto prof = longest_path_profile(complete_graph(5).without_edge(0, 1).without_edge(2, 3));
  for (std::size_t i = 1; i < prof.sets.size(); ++i) EXPECT_LT(prof.sets[i - 1].bits(), prof.sets[i].bits());
}

TEST(LongestPathTest, MatchesDfsOnAllLabelledGraphsUpTo5) {
  LongestPathEngine engine;
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const SmallGraph g = oracle::from_code(n, code);
      const auto dp = engine.compute(g);
      const auto dfs = oracle::dfs_longest_paths(g);
      ASSERT_EQ(dp.order_vertices, dfs.order_vertices);
      ASSERT_EQ(as_masks(dp), dfs.sets);
    }
  }
}

TEST(LongestPathTest, MatchesDfsOnAllConnectedClassesUpTo7) {
  LongestPathEngine engine;
  for (int n = 1; n <= 7; ++n) {
    for_each_connected(n, {}, [&](const SmallGraph& g) {
      const auto dp = engine.compute(g);
      const auto dfs = oracle::dfs_longest_paths(g);
      ASSERT_EQ(dp.order_vertices, dfs.order_vertices);
      ASSERT_EQ(as_masks(dp), dfs.sets);
    });
  }
}

TEST(LongestPathTest, MatchesDfsOnRandomGraphsUpTo12) {
  std::mt19937_64 rng(23);
  LongestPathEngine engine;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 7);
    const SmallGraph g = oracle::random_graph(rng, n, 0.15 + 0.25 * (trial % 3));
    const auto dp = engine.compute(g);
    const auto dfs = oracle::dfs_longest_paths(g);
    ASSERT_EQ(dp.order_vertices, dfs.order_vertices);
    ASSERT_EQ(as_masks(dp), dfs.sets);
  }
}

TEST(LongestPathTest, AddingAnEdgeNeverShortensLongestPath) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const SmallGraph g = oracle::random_graph(rng, n, 0.3);
    const int u = static_cast<int>(rng() % n);
    const int v = (u + 1 + static_cast<int>(rng() % (n - 1))) % n;
    EXPECT_GE(longest_path_profile(add_edge(g, u, v)).length(), longest_path_profile(g).length());
  }
}

TEST(LongestPathTest, LengthIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const SmallGraph g = oracle::random_graph(rng, n, 0.35);
    const auto perm = oracle::random_permutation(rng, n);
    const auto a = longest_path_profile(g);
    const auto b = longest_path_profile(relabel(g, perm));
    EXPECT_EQ(a.length(), b.length());
    EXPECT_EQ(a.sets.size(), b.sets.size());
  }
}

TEST(LongestPathTest, ReconstructedPathsAreValidAndCoverTheirSet) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const SmallGraph g = oracle::random_graph(rng, n, 0.4);
    LongestPathEngine engine;
    const auto prof = engine.compute(g);
    for (const VertexSet& s : prof.sets) {
      const PathSeq p = engine.reconstruct(s.bits());
      ASSERT_TRUE(is_valid_path(g, p));
      ASSERT_EQ(p.vertex_mask(), s.bits());
      ASSERT_EQ(p.order(), prof.order_vertices);
    }
  }
}

TEST(LongestPathTest, ReconstructRejectsNonPathSets) {
  try {
    reconstruct_path(empty_graph(3), VertexSet({0, 1}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoPath);
  }
}

TEST(LongestPathTest, HamiltonianPathExamples) {
  EXPECT_TRUE(hamiltonian_path_exists(path_graph(6)));
  EXPECT_TRUE(hamiltonian_path_exists(cycle_graph(6)));
  EXPECT_FALSE(hamiltonian_path_exists(star_graph(3)));
  EXPECT_FALSE(hamiltonian_path_exists(empty_graph(2)));
}

TEST(PathDistanceTest, Examples) {
  const PathSeq p{{0, 1, 2, 3}};
  EXPECT_EQ(path_distance(p, 0, 3), 3);
  EXPECT_EQ(path_distance(p, 1, 2), 1);
  EXPECT_EQ(path_distance(p, 2, 2), 0);
  EXPECT_EQ(path_distance(p, 3, 0), 3);
  try {
    path_distance(p, 0, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOnPath);
  }
}

TEST(PathValidityTest, Examples) {
  const SmallGraph g = path_graph(4);
  EXPECT_TRUE(is_valid_path(g, PathSeq{{3, 2, 1}}));
  EXPECT_FALSE(is_valid_path(g, PathSeq{{0, 2}}));
  EXPECT_FALSE(is_valid_path(g, PathSeq{{0, 1, 0}}));
  EXPECT_FALSE(is_valid_path(g, PathSeq{{0, 4}}));
}

}  // namespace
}  // namespace longpath
