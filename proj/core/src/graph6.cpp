// Copyright 2026 The qbound Authors
//
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

#include "qbound/graph6.hpp"

#include <cstdint>

namespace qbound {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const int b = static_cast<unsigned char>(c);
  if (b < kBias || b > kMaxByte) throw Error("graph6: byte " + std::to_string(b) + " outside [63,126]");
  return b - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) < kMaxByte) {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() < 4) throw Error("graph6: truncated size field");
    if (static_cast<unsigned char>(text[1]) == kMaxByte) {
      throw Error("graph6: orders above 258047 are not supported");
    }
    n = (static_cast<long>(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  }
  if (n < 1) throw Error("graph6: order 0 is not supported");
  if (n > kMaxVertices) throw Error("graph6: order " + std::to_string(n) + " exceeds limit");

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw Error("graph6: expected " + std::to_string(body) + " body bytes, got " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if (byte & (0x20 >> (k % 6))) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text.back());
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (last & pad_mask) throw Error("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw Error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
}

}  // namespace qbound
