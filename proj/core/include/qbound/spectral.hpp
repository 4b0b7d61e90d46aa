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

#include "qbound/graph.hpp"

namespace qbound {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultMaxIterations = 200000;

/// A dominant eigenvalue together with its certificate: `residual` is
/// ||M v - value v||_inf for the returned eigenvector v scaled to ||v||_inf = 1.
struct SpectralValue {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Raised when power iteration hits the iteration cap. Carries the best estimate.
class SpectralError : public Error {
 public:
  SpectralError(const std::string& what, SpectralValue best) : Error(what), best_(best) {}
  const SpectralValue& best() const { return best_; }

 private:
  SpectralValue best_;
};

struct SpectralOptions {
  double tolerance = kDefaultTolerance;
  int max_iterations = kDefaultMaxIterations;
};

/// Spectral radius of the adjacency matrix.
SpectralValue mu(const Graph& g, const SpectralOptions& options = {});
inline SpectralValue mu(const Graph& g, double tol) { return mu(g, SpectralOptions{tol}); }

/// Spectral radius of the signless Laplacian D + A.
SpectralValue q_index(const Graph& g, const SpectralOptions& options = {});
inline SpectralValue q_index(const Graph& g, double tol) { return q_index(g, SpectralOptions{tol}); }

}  // namespace qbound
