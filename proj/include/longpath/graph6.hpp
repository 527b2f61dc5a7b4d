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

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "longpath/error.hpp"
#include "longpath/small_graph.hpp"

namespace longpath {

// Short-form graph6 (orders below 63). The upper triangle is read column by
// column, (0,1),(0,2),(1,2),(0,3),..., packed six bits per byte, each byte
// offset by 63.
inline std::string encode_graph6(const SmallGraph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | ((g.row(i) >> j) & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

// Strict decoder: every byte must lie in 63..126, the body length must match
// the order exactly and padding bits must be zero.
inline SmallGraph decode_graph6(std::string_view text) {
  if (text.empty()) throw FormatError(0, "empty graph6 record");
  for (std::size_t at = 0; at < text.size(); ++at) {
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw FormatError(at, "byte outside graph6 range 63..126");
  }
  const int size_byte = static_cast<unsigned char>(text[0]) - 63;
  if (size_byte == 63) throw FormatError(0, "extended order prefix (n >= 63) unsupported");
  if (size_byte > kMaxVertices) {
    throw FormatError(0, "graph order " + std::to_string(size_byte) + " exceeds 16");
  }
  const int n = size_byte;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw FormatError(text.size(), "record too short");
  if (text.size() > 1 + body) throw FormatError(1 + body, "trailing bytes after record");

  AdjacencyRows rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] = static_cast<Mask>(rows[i] | bit(j));
        rows[j] = static_cast<Mask>(rows[j] | bit(i));
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[body]) - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw FormatError(body, "nonzero padding bits");
  }
  return SmallGraph::from_rows(n, rows);
}

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// One record per line. Blank lines, the optional ">>graph6<<" header and
// sparse6 (':') or digraph6 ('&') lines are skipped. `visit` receives each
// decoded graph; decoding errors are rethrown with the line number prefixed.
template <typename Visitor>
std::size_t for_each_graph6(std::istream& in, Visitor&& visit) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view record = line;
    if (record.starts_with(kGraph6Header)) record.remove_prefix(kGraph6Header.size());
    if (record.empty() || record.front() == ':' || record.front() == '&') continue;
    SmallGraph g;
    try {
      g = decode_graph6(record);
    } catch (const FormatError& e) {
      throw FormatError(e.offset(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    visit(g);
    ++count;
  }
  return count;
}

inline std::vector<SmallGraph> read_graph6_stream(std::istream& in) {
  std::vector<SmallGraph> out;
  for_each_graph6(in, [&](const SmallGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace longpath
