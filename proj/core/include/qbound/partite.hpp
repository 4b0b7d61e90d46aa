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

#include <string>
#include <vector>

#include "qbound/graph.hpp"
#include "qbound/spectral.hpp"
#include "qbound/ysolver.hpp"

namespace qbound {

inline constexpr int kCliqueSearchLimit = 64;
inline constexpr int kPhiSearchLimit = 14;

/// Raised when an exact search is asked for a graph above its order limit.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

struct CliqueCertificate {
  std::vector<Vertex> vertices;  // sorted
  int size() const { return static_cast<int>(vertices.size()); }
};

/// Partition V_1..V_r with d(v) <= n - |V_i| for every v in V_i. Parts are
/// non-empty, listed by ascending size, each sorted.
struct PartitionCertificate {
  std::vector<std::vector<Vertex>> parts;
  int r() const { return static_cast<int>(parts.size()); }
  std::vector<int> sizes() const;
};

/// Exact maximum clique: branch and bound with greedy-colouring bounds.
CliqueCertificate clique_number(const Graph& g, int limit = kCliqueSearchLimit);

/// Smallest r admitting a valid r-partition, with the witnessing partition.
///
/// Validity depends only on degrees, and the highest-degree vertices can
/// always be moved into the smallest parts, so the search runs over
/// ascending part-size vectors filled in non-increasing degree order. Among
/// optimal partitions the lexicographically smallest ascending size vector
/// is returned.
PartitionCertificate phi_number(const Graph& g, int limit = kPhiSearchLimit);

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);
bool is_valid_partition(const Graph& g, const PartitionCertificate& cert);

/// Pointwise d_H(i) <= d_{H*}(i). Throws Error on a length mismatch.
bool dominates(const DegreeSequence& h_star, const DegreeSequence& h);

/// Complete multipartite graph on the parts of `cert`, vertex labels kept,
/// so each v in V_i gets degree n - |V_i| >= d(v).
Graph dominating_multipartite(const Graph& g, const PartitionCertificate& cert);
Graph dominating_multipartite(const Graph& g, int limit = kPhiSearchLimit);

/// One evaluated relation lhs <= rhs (or lhs < rhs when strict).
struct PartiteCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool strict = false;
  bool holds = false;
};

/// phi <= omega, n/(n-d) <= phi, n/(n-y+1) < phi + 1/3, n/(n-mu) < phi + 1/3
/// and n/(n-mu) <= n/(n-y+1). Comparisons allow `slack`.
std::vector<PartiteCheck> partite_inequalities(const Graph& g, const YSolution& y, const SpectralValue& mu,
                                               const CliqueCertificate& omega, const PartitionCertificate& phi,
                                               double slack = 1e-9);
std::vector<PartiteCheck> partite_inequalities(const Graph& g, int limit = kPhiSearchLimit);

}  // namespace qbound
