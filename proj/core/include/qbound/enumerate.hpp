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
#include <functional>
#include <string>
#include <vector>

#include "qbound/graph.hpp"

namespace qbound {

inline constexpr int kMaxExhaustiveOrder = 7;

/// Labeled graph on n vertices whose edge set is given by `mask`, bit k
/// standing for the k-th pair in graph6 order (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_mask(int n, std::uint64_t mask);

/// Calls `visit` for every labeled simple graph on n vertices (n <= 7), in
/// increasing mask order, optionally skipping disconnected ones.
void for_each_labeled_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);

/// Label-invariant refinement labeling, returned as the graph6 string of the
/// relabeled graph. Equal strings imply isomorphic graphs; isomorphic graphs
/// almost always (not provably always) get equal strings.
std::string refined_certificate(const Graph& g);

/// Connected graphs with exactly 1..max_edges edges, one list per edge count
/// (index 0 holds m = 1). Every isomorphism class is represented at least once.
std::vector<std::vector<Graph>> connected_graphs_by_size(int max_edges);

}  // namespace qbound
