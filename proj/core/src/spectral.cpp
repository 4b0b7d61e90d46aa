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

#include "qbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qbound {

namespace {

enum class Operator { kAdjacency, kSignlessLaplacian };

// Component in compressed form. The diagonal holds the shift (1 for the
// adjacency matrix, the degree for D + A); both make the operator primitive
// on a connected component, so the iteration cannot oscillate.
struct Block {
  std::vector<int> offsets;
  std::vector<int> targets;
  std::vector<long double> diagonal;
};

Block make_block(const Graph& g, std::span<const Vertex> comp, Operator op) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
  Block b;
  b.offsets.push_back(0);
  for (Vertex v : comp) {
    for (Vertex w : g.neighbors(v)) b.targets.push_back(local[static_cast<std::size_t>(w)]);
    b.offsets.push_back(static_cast<int>(b.targets.size()));
    b.diagonal.push_back(op == Operator::kAdjacency ? 1.0L : static_cast<long double>(g.degree(v)));
  }
  return b;
}

// Power iteration with the Rayleigh quotient as the estimate. Returns the
// eigenvalue of the shifted operator; the residual is shift-invariant.
SpectralValue power_iterate(const Block& b, const SpectralOptions& opt) {
  const std::size_t n = b.diagonal.size();
  std::vector<long double> v(n, 1.0L), w(n);
  SpectralValue best{0.0, INFINITY, 0};
  for (int it = 1; it <= opt.max_iterations; ++it) {
    long double vw = 0, vv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double acc = b.diagonal[i] * v[i];
      for (int k = b.offsets[i]; k < b.offsets[i + 1]; ++k) acc += v[static_cast<std::size_t>(b.targets[static_cast<std::size_t>(k)])];
      w[i] = acc;
      vw += v[i] * acc;
      vv += v[i] * v[i];
    }
    const long double lambda = vw / vv;
    long double residual = 0, scale = 0;
    for (std::size_t i = 0; i < n; ++i) {
      residual = std::max(residual, std::fabs(w[i] - lambda * v[i]));
      scale = std::max(scale, std::fabs(w[i]));
    }
    const double r = static_cast<double>(residual);
    if (r < best.residual) best = {static_cast<double>(lambda), r, it};
    if (r <= opt.tolerance) return best;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / scale;
  }
  best.iterations = opt.max_iterations;
  return best;
}

SpectralValue spectral_radius(const Graph& g, const SpectralOptions& opt, Operator op) {
  if (!(opt.tolerance > 0.0)) throw Error("spectral: tolerance must be positive");
  if (opt.max_iterations < 1) throw Error("spectral: max_iterations must be positive");
  SpectralValue result{0.0, 0.0, 0};
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    const Block block = make_block(g, comp, op);
    SpectralValue part = power_iterate(block, opt);
    const double shift = op == Operator::kAdjacency ? 1.0 : 0.0;
    part.value -= shift;
    if (part.residual > opt.tolerance) {
      part.value = std::max(part.value, result.value);
      throw SpectralError("spectral: no convergence after " + std::to_string(opt.max_iterations) +
                              " iterations (residual " + std::to_string(part.residual) + ")",
                          part);
    }
    result.iterations += part.iterations;
    if (part.value > result.value) {
      result.value = part.value;
      result.residual = part.residual;
    }
  }
  return result;
}

}  // namespace

SpectralValue mu(const Graph& g, const SpectralOptions& options) {
  return spectral_radius(g, options, Operator::kAdjacency);
}

SpectralValue q_index(const Graph& g, const SpectralOptions& options) {
  return spectral_radius(g, options, Operator::kSignlessLaplacian);
}

}  // namespace qbound
