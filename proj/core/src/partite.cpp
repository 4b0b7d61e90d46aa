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

#include "qbound/partite.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace qbound {

namespace {

using Mask = std::uint64_t;

// Vertices by non-increasing degree, index tiebreak.
std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

class MaxClique {
 public:
  explicit MaxClique(const Graph& g) : order_(degree_order(g)), adj_(static_cast<std::size_t>(g.order()), 0) {
    std::vector<int> pos(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) pos[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    for (const Edge& e : g.edges()) {
      const int a = pos[static_cast<std::size_t>(e.u)];
      const int b = pos[static_cast<std::size_t>(e.v)];
      adj_[static_cast<std::size_t>(a)] |= Mask{1} << b;
      adj_[static_cast<std::size_t>(b)] |= Mask{1} << a;
    }
  }

  std::vector<Vertex> run() {
    const int n = static_cast<int>(order_.size());
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    best_ = {0};  // any single vertex is a clique
    current_.clear();
    expand(all);
    std::vector<Vertex> out;
    for (int p : best_) out.push_back(order_[static_cast<std::size_t>(p)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(Mask candidates) {
    // Greedy colouring: color[i] bounds the clique size within order[0..i].
    std::vector<int> order;
    std::vector<int> color;
    Mask uncolored = candidates;
    for (int k = 1; uncolored; ++k) {
      Mask q = uncolored;
      while (q) {
        const int v = std::countr_zero(q);
        q &= q - 1;
        q &= ~adj_[static_cast<std::size_t>(v)];
        uncolored &= ~(Mask{1} << v);
        order.push_back(v);
        color.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + static_cast<std::size_t>(color[i]) <= best_.size()) return;
      const int v = order[i];
      current_.push_back(v);
      const Mask next = candidates & adj_[static_cast<std::size_t>(v)];
      if (next) {
        expand(next);
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      candidates &= ~(Mask{1} << v);
    }
  }

  std::vector<Vertex> order_;
  std::vector<Mask> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
};

// Ascending part sizes, first fit in lexicographic order. Part j receives the
// next sizes[j] vertices of the degree order; its leading vertex has the
// largest degree in the part.
bool choose_sizes(const std::vector<int>& degrees, int n, int parts_left, int start, int min_size,
                  std::vector<int>& sizes) {
  const int remaining = n - start;
  if (parts_left == 0) return remaining == 0;
  const int lead = degrees[static_cast<std::size_t>(start)];
  for (int s = min_size; s * parts_left <= remaining; ++s) {
    if (lead > n - s) break;
    if (parts_left == 1 && s != remaining) continue;
    sizes.push_back(s);
    if (choose_sizes(degrees, n, parts_left - 1, start + s, s, sizes)) return true;
    sizes.pop_back();
  }
  return false;
}

}  // namespace

std::vector<int> PartitionCertificate::sizes() const {
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(static_cast<int>(p.size()));
  return out;
}

CliqueCertificate clique_number(const Graph& g, int limit) {
  const int cap = std::min(limit, kCliqueSearchLimit);
  if (g.order() > cap) {
    throw SearchLimitError("clique_number: n = " + std::to_string(g.order()) + " exceeds exact-search limit " +
                           std::to_string(cap) + "; intended for corpus-scale graphs");
  }
  return {MaxClique(g).run()};
}

PartitionCertificate phi_number(const Graph& g, int limit) {
  const int n = g.order();
  if (n > limit) {
    throw SearchLimitError("phi_number: n = " + std::to_string(n) + " exceeds exact-search limit " +
                           std::to_string(limit));
  }
  const std::vector<Vertex> order = degree_order(g);
  std::vector<int> degrees;
  for (Vertex v : order) degrees.push_back(g.degree(v));

  // r >= n/(n - d) = n^2 / (n^2 - 2m).
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  const std::int64_t den = nn - 2 * static_cast<std::int64_t>(g.size());
  const int r_min = static_cast<int>((nn + den - 1) / den);

  for (int r = std::max(1, r_min); r <= n; ++r) {
    std::vector<int> sizes;
    if (!choose_sizes(degrees, n, r, 0, 1, sizes)) continue;
    PartitionCertificate cert;
    std::size_t next = 0;
    for (int s : sizes) {
      std::vector<Vertex> part(order.begin() + static_cast<std::ptrdiff_t>(next),
                               order.begin() + static_cast<std::ptrdiff_t>(next + static_cast<std::size_t>(s)));
      std::sort(part.begin(), part.end());
      cert.parts.push_back(std::move(part));
      next += static_cast<std::size_t>(s);
    }
    return cert;
  }
  throw Error("phi_number: no valid partition found");  // unreachable: singletons always work
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_valid_partition(const Graph& g, const PartitionCertificate& cert) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& part : cert.parts) {
    if (part.empty()) return false;
    const int limit = g.order() - static_cast<int>(part.size());
    for (Vertex v : part) {
      if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]++) return false;
      if (g.degree(v) > limit) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

bool dominates(const DegreeSequence& h_star, const DegreeSequence& h) {
  if (h_star.size() != h.size()) throw Error("dominates: degree sequences differ in length");
  const auto a = h_star.values();
  const auto b = h.values();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

Graph dominating_multipartite(const Graph& g, const PartitionCertificate& cert) {
  std::vector<int> part_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t p = 0; p < cert.parts.size(); ++p)
    for (Vertex v : cert.parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) edges.push_back({i, j});
  return Graph(g.order(), std::move(edges));
}

Graph dominating_multipartite(const Graph& g, int limit) { return dominating_multipartite(g, phi_number(g, limit)); }

std::vector<PartiteCheck> partite_inequalities(const Graph& g, const YSolution& y, const SpectralValue& mu,
                                               const CliqueCertificate& omega, const PartitionCertificate& phi,
                                               double slack) {
  const double n = g.order();
  const double r = phi.r();
  const double third = 1.0 / 3.0;
  const double avg_ratio = static_cast<double>(n * n) / (n * n - 2.0 * g.size());
  const double y_ratio = n / (n - y.y + 1.0);
  const double mu_ratio = n / (n - mu.value);
  auto le = [&](std::string name, double lhs, double rhs) {
    return PartiteCheck{std::move(name), lhs, rhs, false, lhs <= rhs + slack};
  };
  auto lt = [&](std::string name, double lhs, double rhs) {
    return PartiteCheck{std::move(name), lhs, rhs, true, lhs < rhs + slack};
  };
  return {
      le("phi <= omega", r, omega.size()),
      le("n/(n-d) <= phi", avg_ratio, r),
      lt("n/(n-y+1) < phi + 1/3", y_ratio, r + third),
      lt("n/(n-mu) < phi + 1/3", mu_ratio, r + third),
      le("n/(n-mu) <= n/(n-y+1)", mu_ratio, y_ratio),
  };
}

std::vector<PartiteCheck> partite_inequalities(const Graph& g, int limit) {
  return partite_inequalities(g, solve_y(degree_sequence(g)), mu(g), clique_number(g), phi_number(g, limit));
}

}  // namespace qbound
