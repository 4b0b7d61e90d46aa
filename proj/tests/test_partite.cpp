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


#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qbound/enumerate.hpp"
#include "qbound/generators.hpp"
#include "qbound/partite.hpp"

using namespace qbound;

TEST_CASE("clique numbers") {
  CHECK(clique_number(gen::complete_bipartite(7, 9)).size() == 2);
  const std::vector<int> parts{3, 3, 4};
  CHECK(clique_number(gen::complete_multipartite(parts)).size() == 3);
  CHECK(clique_number(gen::wheel(6)).size() == oracle::clique_number(gen::wheel(6)));
  CHECK(clique_number(gen::wheel(6)).size() == 3);
  CHECK(clique_number(gen::empty(4)).size() == 1);
  CHECK_THROWS_AS(clique_number(gen::empty(65)), SearchLimitError);
}

TEST_CASE("phi numbers") {
  for (int n = 1; n <= 7; ++n) CHECK(phi_number(gen::complete(n)).r() == n);
  const PartitionCertificate k79 = phi_number(gen::complete_bipartite(7, 9), 16);
  CHECK(k79.r() == 2);
  CHECK(k79.sizes() == std::vector<int>{7, 9});
  CHECK(phi_number(gen::empty(5)).r() == 1);
  CHECK(phi_number(gen::path(3)).r() == 2);
  CHECK(phi_number(gen::path(3)).sizes() == std::vector<int>{1, 2});
  // Sizes 2 and 3 already satisfy d = 2 <= n - n_i.
  CHECK(phi_number(gen::cycle(5)).r() == oracle::phi_number(gen::cycle(5)));
  CHECK(phi_number(gen::cycle(5)).sizes() == std::vector<int>{2, 3});
  CHECK(phi_number(gen::cycle(6)).r() == 2);
  CHECK_THROWS_AS(phi_number(gen::empty(15)), SearchLimitError);
}

TEST_CASE("domination") {
  CHECK(dominates(DegreeSequence({2, 2, 2}), DegreeSequence({2, 1, 1})));
  CHECK_FALSE(dominates(DegreeSequence({2, 2, 2, 2}), DegreeSequence({3, 1, 1, 1})));
  CHECK_THROWS_AS(dominates(DegreeSequence({1, 1}), DegreeSequence({1, 1, 0})), Error);
}

TEST_CASE("dominating complete multipartite graph") {
  const Graph k79 = gen::complete_bipartite(7, 9);
  CHECK(degree_sequence(dominating_multipartite(k79, 16)) == degree_sequence(k79));
  CHECK(degree_sequence(dominating_multipartite(gen::path(3))) == degree_sequence(gen::path(3)));
  const Graph c5 = gen::cycle(5);
  const Graph star = dominating_multipartite(c5);
  CHECK(dominates(degree_sequence(star), degree_sequence(c5)));
  CHECK(clique_number(star).size() == phi_number(c5).r());
}

TEST_CASE("inequalities on named graphs") {
  for (const PartiteCheck& c : partite_inequalities(gen::complete_bipartite(7, 9), 16)) CHECK_MESSAGE(c.holds, c.name);
  for (const PartiteCheck& c : partite_inequalities(gen::cycle(6))) {
    CHECK(c.holds);
    if (c.name == "n/(n-d) <= phi") CHECK(c.lhs == 1.5);
  }
  for (const PartiteCheck& c : partite_inequalities(gen::complete(5))) {
    if (c.name == "phi <= omega" || c.name == "n/(n-d) <= phi") {
      CHECK(c.lhs == 5.0);
      CHECK(c.rhs == 5.0);
    }
  }
}

TEST_CASE("exact searches match brute force on every graph with 6 vertices") {
  long mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, false, [&](const Graph& g) {
      const CliqueCertificate w = clique_number(g);
      const PartitionCertificate p = phi_number(g);
      if (w.size() != oracle::clique_number(g) || !is_clique(g, w.vertices)) ++mismatches;
      if (p.r() != oracle::phi_number(g) || !is_valid_partition(g, p)) ++mismatches;
      const auto sizes = p.sizes();
      if (!std::is_sorted(sizes.begin(), sizes.end())) ++mismatches;
    });
  }
  CHECK(mismatches == 0);
}

TEST_CASE("exact searches match brute force on random graphs") {
  SplitMix64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const Graph g = gen::erdos_renyi(7 + i % 3, rng.uniform(), rng);
    CHECK(clique_number(g).size() == oracle::clique_number(g));
    CHECK(phi_number(g).r() == oracle::phi_number(g));
  }
  for (int i = 0; i < 20; ++i) {
    const Graph g = gen::erdos_renyi(12 + i % 7, rng.uniform(), rng);
    CHECK(clique_number(g).size() == oracle::clique_number(g));
  }
}
