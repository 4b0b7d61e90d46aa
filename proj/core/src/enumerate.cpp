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

#include "qbound/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "qbound/graph6.hpp"

namespace qbound {

namespace {

bool mask_connected(int n, std::uint64_t mask) {
  std::uint32_t adj[kMaxExhaustiveOrder] = {};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (mask >> k & 1) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= adj[v];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1u << n) - 1;
}

// Color refinement until stable. Colors are ranks of (old color, sorted
// neighbour colors), so the result does not depend on vertex labels.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  std::vector<int> distinct = color;
  std::sort(distinct.begin(), distinct.end());
  int classes = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& key = sig[static_cast<std::size_t>(v)].first;
      key.clear();
      key.push_back(color[static_cast<std::size_t>(v)]);
      for (Vertex w : g.neighbors(v)) key.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(key.begin() + 1, key.end());
      sig[static_cast<std::size_t>(v)].second = v;
    }
    auto order = sig;
    std::sort(order.begin(), order.end());
    int rank = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || order[i].first != order[i - 1].first) ++rank;
      color[static_cast<std::size_t>(order[i].second)] = rank;
    }
    if (rank + 1 == classes) return;
    classes = rank + 1;
  }
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (mask >> k & 1) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

void for_each_labeled_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxExhaustiveOrder) {
    throw Error("exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxExhaustiveOrder));
  }
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (connected_only && !mask_connected(n, mask)) continue;
    visit(graph_from_mask(n, mask));
  }
}

std::string refined_certificate(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  refine(g, color);
  while (true) {
    // First non-singleton cell; individualize its lowest-labeled vertex.
    std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
    for (int c : color) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) break;
    int chosen = 0;
    while (color[static_cast<std::size_t>(chosen)] != target) ++chosen;
    for (int v = 0; v < n; ++v) {
      color[static_cast<std::size_t>(v)] = 2 * color[static_cast<std::size_t>(v)] + (v == chosen ? 0 : 1);
    }
    refine(g, color);
  }
  return write_graph6(relabel(g, color));
}

std::vector<std::vector<Graph>> connected_graphs_by_size(int max_edges) {
  std::vector<std::vector<Graph>> levels;
  if (max_edges < 1) return levels;
  levels.push_back({Graph(2, {{0, 1}})});
  // A connected graph with m + 1 edges arises from a connected graph with m
  // edges by adding a non-bridge edge, or a pendant vertex when it is a tree.
  for (int m = 1; m < max_edges; ++m) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> next;
    auto offer = [&](Graph h) {
      if (seen.insert(refined_certificate(h)).second) next.push_back(std::move(h));
    };
    for (const Graph& g : levels.back()) {
      const int n = g.order();
      const auto edges = g.edges();
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (g.adjacent(i, j)) continue;
          std::vector<Edge> e(edges.begin(), edges.end());
          e.push_back({i, j});
          offer(Graph(n, std::move(e)));
        }
      }
      for (int v = 0; v < n; ++v) {
        std::vector<Edge> e(edges.begin(), edges.end());
        e.push_back({v, n});
        offer(Graph(n + 1, std::move(e)));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace qbound
