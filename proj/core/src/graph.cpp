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

#include "qbound/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qbound {

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
  if (std::any_of(values_.begin(), values_.end(), [](int x) { return x < 0; })) {
    throw Error("degree sequence has a negative entry");
  }
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::int64_t DegreeSequence::sum() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

std::int64_t DegreeSequence::sum_of_squares() const {
  std::int64_t s = 0;
  for (int x : values_) s += static_cast<std::int64_t>(x) * x;
  return s;
}

double DegreeSequence::average() const {
  if (values_.empty()) return 0.0;
  return static_cast<double>(sum()) / static_cast<double>(values_.size());
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    throw Error("vertex count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]");
  }
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    }
    if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  return DegreeSequence(std::move(d));
}

LineDegreeSequence line_degree_sequence(const Graph& g) {
  if (g.size() == 0) throw Error("no edges");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(g.size()));
  for (const Edge& e : g.edges()) values.push_back(g.degree(e.u) + g.degree(e.v) - 2);
  return LineDegreeSequence(std::move(values));
}

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw Error("no edges");
  // Edges sharing vertex v form a clique in the line graph.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  const auto edges = g.edges();
  for (int i = 0; i < g.size(); ++i) {
    incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].u)].push_back(i);
    incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].v)].push_back(i);
  }
  std::vector<Edge> out;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) out.push_back({star[a], star[b]});
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint, so no duplicates arise.
  return Graph(g.size(), std::move(out));
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> result;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw Error("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.size()));
  for (const Edge& e : g.edges()) {
    edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  }
  return Graph(g.order(), std::move(edges));
}

}  // namespace qbound
