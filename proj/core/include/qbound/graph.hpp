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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vertex = int;

/// Largest vertex count accepted by the Graph constructor.
inline constexpr int kMaxVertices = 4096;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Degrees sorted non-increasingly (d_1 >= d_2 >= ... >= d_n).
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Sorts `values` non-increasingly. Throws Error on negative entries.
  explicit DegreeSequence(std::vector<int> values);

  std::span<const int> values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  /// 1-based access, matching d_1..d_n.
  int d(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }

  int max() const { return values_.empty() ? 0 : values_.front(); }
  int min() const { return values_.empty() ? 0 : values_.back(); }
  std::int64_t sum() const;
  std::int64_t sum_of_squares() const;
  /// Average degree 2m/n.
  double average() const;
  bool is_constant() const { return max() == min(); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

/// Degrees of the line graph, Delta_1 >= ... >= Delta_m. Same shape as a
/// degree sequence, kept as a distinct type so the two cannot be mixed up.
class LineDegreeSequence {
 public:
  LineDegreeSequence() = default;
  explicit LineDegreeSequence(std::vector<int> values) : seq_(std::move(values)) {}

  std::span<const int> values() const { return seq_.values(); }
  int size() const { return seq_.size(); }
  int d(int k) const { return seq_.d(k); }
  const DegreeSequence& as_degree_sequence() const { return seq_; }

  friend bool operator==(const LineDegreeSequence&, const LineDegreeSequence&) = default;

 private:
  DegreeSequence seq_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges are kept in canonical order (lexicographic on (min, max)); the
/// adjacency lists are sorted.
class Graph {
 public:
  /// Edgeless graph on `n` vertices.
  explicit Graph(int n = 1);
  /// Throws Error on loops, duplicate edges, out-of-range endpoints, or
  /// n outside [1, kMaxVertices].
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Index of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

DegreeSequence degree_sequence(const Graph& g);

/// Multiset {d_u + d_v - 2 : uv in E}, sorted. Throws Error("no edges") when m = 0.
LineDegreeSequence line_degree_sequence(const Graph& g);

/// Line graph; vertex i corresponds to g.edges()[i]. Throws Error("no edges") when m = 0.
Graph line_graph(const Graph& g);

/// Connected components, each a sorted vertex list, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace qbound
