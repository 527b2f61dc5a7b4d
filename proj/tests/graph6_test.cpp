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
#include <sstream>

#include "gtest/gtest.h"
#include "longpath/generator.hpp"
#include "longpath/graph6.hpp"
#include "oracles.hpp"

namespace longpath {
namespace {

// Expected strings were worked out by hand from the bit layout and match the
// output of networkx.to_graph6_bytes.
TEST(Graph6Test, EncodeExamples) {
  EXPECT_EQ(encode_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(encode_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(encode_graph6(empty_graph(1)), "@");
  EXPECT_EQ(encode_graph6(empty_graph(2)), "A?");
  EXPECT_EQ(encode_graph6(path_graph(4)), "Ch");
}

TEST(Graph6Test, DecodeExamples) {
  EXPECT_EQ(decode_graph6("A_"), complete_graph(2));
  EXPECT_EQ(decode_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(decode_graph6("A?"), empty_graph(2));
  EXPECT_EQ(decode_graph6("?"), empty_graph(0));
}

TEST(Graph6Test, PetersenMatchesReferenceTooling) {
  const SmallGraph g = decode_graph6("IheA@GUAo");
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.edge_count(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
  EXPECT_EQ(encode_graph6(g), "IheA@GUAo");
}

std::size_t error_offset(std::string_view text) {
  try {
    decode_graph6(text);
  } catch (const FormatError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "accepted malformed '" << text << "'";
  return 0;
}

TEST(Graph6Test, MalformedInputsReportOffsets) {
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("A"), 1u);       // K2 needs one body byte
  EXPECT_EQ(error_offset("A_?"), 2u);     // trailing byte
  EXPECT_EQ(error_offset("A`"), 1u);      // pad bits set: 100001
  EXPECT_EQ(error_offset("B "), 1u);      // space is outside 63..126
  EXPECT_EQ(error_offset("Bw\x7f"), 2u);  // DEL is outside the range
  EXPECT_EQ(error_offset("~"), 0u);       // extended-order prefix
  EXPECT_EQ(error_offset("Q"), 0u);       // n = 18 exceeds 16
  EXPECT_EQ(error_offset("Ch?"), 2u);
}

TEST(Graph6Test, RoundTripRandomGraphsUpTo16) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % (kMaxVertices + 1));
    const SmallGraph g = oracle::random_graph(rng, n, 0.4);
    const std::string text = encode_graph6(g);
    for (char c : text) {
      ASSERT_GE(static_cast<unsigned char>(c), 63);
      ASSERT_LE(static_cast<unsigned char>(c), 126);
    }
    ASSERT_EQ(decode_graph6(text), g);
    ASSERT_EQ(encode_graph6(decode_graph6(text)), text);
  }
}

TEST(Graph6Test, RoundTripAllClassesUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    for (const SmallGraph& g : enumerate_connected(n)) {
      ASSERT_EQ(decode_graph6(encode_graph6(g)), g);
    }
  }
}

TEST(Graph6StreamTest, TrailingNewlineDoesNotMatter) {
  std::istringstream with("A_\nBw\nCh\n");
  std::istringstream without("A_\nBw\nCh");
  EXPECT_EQ(read_graph6_stream(with).size(), 3u);
  EXPECT_EQ(read_graph6_stream(without).size(), 3u);
}

TEST(Graph6StreamTest, SkipsHeaderSparse6AndBlankLines) {
  std::istringstream in(">>graph6<<A_\n\n:Fa@x^\nBw\r\n");
  const auto graphs = read_graph6_stream(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0], complete_graph(2));
  EXPECT_EQ(graphs[1], complete_graph(3));
}

TEST(Graph6StreamTest, ErrorsNameTheLine) {
  std::istringstream in("A_\nA`\n");
  try {
    read_graph6_stream(in);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_EQ(e.offset(), 1u);
  }
}

}  // namespace
}  // namespace longpath
