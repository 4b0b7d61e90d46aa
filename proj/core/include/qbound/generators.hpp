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
#include <string>
#include <string_view>
#include <vector>

#include "qbound/graph.hpp"

namespace qbound {

/// SplitMix64 stream. Fixed so that random corpora are reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace gen {

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,n-1}, hub 0.
Graph star(int n);
/// Hub 0 joined to the cycle 1..n-1; n >= 4.
Graph wheel(int n);
/// Sides {0..s-1} and {s..s+t-1}.
Graph complete_bipartite(int s, int t);
/// Parts laid out consecutively in the given order.
Graph complete_multipartite(std::span<const int> part_sizes);
/// Triangle {0,1,2} with pendant vertex 3 on vertex 0.
Graph k13plus();
/// d-regular circulant: i ~ i +- 1..d/2, plus the antipode when d is odd (n even).
Graph circulant_regular(int n, int d);
/// Adjacent centers 0 and 1 carrying a and b pendant leaves.
Graph double_star(int a, int b);
/// G(n, p): pairs visited in graph6 order, edge kept when rng.uniform() < p.
Graph erdos_renyi(int n, double p, SplitMix64& rng);

}  // namespace gen

/// A named family plus numeric parameters, e.g. {"bipartite", {3, 4}}.
struct FamilySpec {
  std::string name;
  std::vector<double> params;
  std::uint64_t seed = 0;
};

/// Parses "wheel(10)", "bipartite(3,4)", "k13plus" or "random(12,0.5)".
FamilySpec parse_family_spec(std::string_view text);

/// Display id such as "wheel(10)".
std::string family_id(const FamilySpec& spec);

/// Builds the named graph. Families: empty, path, cycle, complete, star,
/// wheel, bipartite, multipartite, k13plus, regular, doublestar, random.
/// Throws Error on unknown families or invalid parameters.
Graph generate(const FamilySpec& spec);

}  // namespace qbound
