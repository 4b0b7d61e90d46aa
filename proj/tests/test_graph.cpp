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
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "qbound/enumerate.hpp"
#include "qbound/generators.hpp"
#include "qbound/graph.hpp"
#include "qbound/graph6.hpp"

using namespace qbound;

namespace {

std::vector<int> vals(const DegreeSequence& ds) { return {ds.values().begin(), ds.values().end()}; }
std::vector<int> vals(const LineDegreeSequence& ds) { return {ds.values().begin(), ds.values().end()}; }

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{gen::path(3),  gen::star(5),  gen::wheel(5), gen::k13plus(),
                         gen::cycle(7), gen::empty(4), gen::complete(6), gen::complete_bipartite(7, 9),
                         gen::double_star(2, 3)};
  SplitMix64 rng(7);
  for (int i = 0; i < 40; ++i) out.push_back(gen::erdos_renyi(3 + i % 11, 0.15 + 0.02 * i, rng));
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("degree sequences") {
  CHECK(vals(degree_sequence(gen::path(3))) == std::vector<int>{2, 1, 1});
  std::vector<int> k79(7, 9);
  k79.insert(k79.end(), 9, 7);
  CHECK(vals(degree_sequence(gen::complete_bipartite(7, 9))) == k79);
  CHECK(vals(degree_sequence(gen::empty(4))) == std::vector<int>{0, 0, 0, 0});
  const DegreeSequence ds({3, 1, 2});
  CHECK(ds.d(1) == 3);
  CHECK(ds.d(3) == 1);
}

TEST_CASE("line degree sequences") {
  CHECK(vals(line_degree_sequence(gen::path(3))) == std::vector<int>{1, 1});
  CHECK(vals(line_degree_sequence(gen::k13plus())) == std::vector<int>{3, 3, 2, 2});
  for (int d : {2, 3, 4}) {
    const auto lds = line_degree_sequence(gen::circulant_regular(10, d));
    CHECK(std::all_of(lds.values().begin(), lds.values().end(), [&](int x) { return x == 2 * d - 2; }));
  }
  CHECK_THROWS_AS(line_degree_sequence(gen::empty(3)), Error);
  CHECK_THROWS_WITH(line_graph(gen::empty(3)), doctest::Contains("no edges"));
}

TEST_CASE("line graphs") {
  CHECK(line_graph(gen::path(3)) == gen::complete(2));
  CHECK(line_graph(gen::star(4)) == gen::complete(3));
  for (const Graph& g : sample_graphs()) {
    if (g.size() == 0) continue;
    const Graph lg = line_graph(g);
    CHECK(lg == oracle::line_graph(g));
    CHECK(2 * static_cast<std::int64_t>(lg.size()) == degree_sequence(g).sum_of_squares() - 2 * g.size());
    CHECK(line_degree_sequence(g).as_degree_sequence() == degree_sequence(lg));
  }
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), Error);
}

TEST_CASE("structural invariants on samples") {
  for (const Graph& g : sample_graphs()) {
    const DegreeSequence ds = degree_sequence(g);
    CHECK(ds.sum() == 2 * g.size());
    for (int k = 1; k < ds.size(); ++k) CHECK(ds.d(k) >= ds.d(k + 1));
    CHECK(ds.max() <= g.order() - 1);
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex w : g.neighbors(v)) {
        CHECK(w != v);
        CHECK(g.adjacent(w, v));
      }
    CHECK(is_connected(g) == oracle::connected(g));
  }
}

TEST_CASE("components and relabeling") {
  const Graph g(5, {{0, 1}, {3, 4}});
  CHECK(components(g).size() == 3);
  CHECK_FALSE(is_connected(g));
  const std::vector<Vertex> perm{4, 3, 2, 1, 0};
  CHECK(degree_sequence(relabel(gen::star(5), perm)) == degree_sequence(gen::star(5)));
  const std::vector<Vertex> tri{0, 1, 2};
  CHECK(induced_subgraph(gen::k13plus(), tri) == gen::complete(3));
}

TEST_CASE("generators") {
  CHECK(vals(degree_sequence(gen::star(5))) == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(vals(degree_sequence(gen::wheel(5))) == std::vector<int>{4, 3, 3, 3, 3});
  const Graph k = gen::k13plus();
  CHECK(k.order() == 4);
  CHECK(k.size() == 4);
  CHECK(vals(degree_sequence(k)) == std::vector<int>{3, 2, 2, 1});
  const std::vector<int> parts{3, 3, 4};
  CHECK(gen::complete_multipartite(parts).size() == 9 + 12 + 12);
  CHECK(degree_sequence(gen::circulant_regular(9, 4)).is_constant());
  CHECK_THROWS_AS(gen::wheel(3), Error);
  CHECK_THROWS_AS(gen::circulant_regular(5, 3), Error);
}

TEST_CASE("family specs") {
  const FamilySpec f = parse_family_spec("bipartite(3,4)");
  CHECK(f.name == "bipartite");
  CHECK(f.params == std::vector<double>{3, 4});
  CHECK(family_id(f) == "bipartite(3,4)");
  CHECK(generate(f) == gen::complete_bipartite(3, 4));
  CHECK(generate(parse_family_spec("k13plus")) == gen::k13plus());
  CHECK_THROWS_AS(generate(parse_family_spec("nosuch(3)")), Error);
  CHECK_THROWS_AS(generate(parse_family_spec("star(2.5)")), Error);
  CHECK_THROWS_AS(parse_family_spec("star(3"), Error);
}

TEST_CASE("random graphs are reproducible") {
  SplitMix64 a(42), b(42);
  CHECK(gen::erdos_renyi(12, 0.5, a) == gen::erdos_renyi(12, 0.5, b));
  SplitMix64 c(0);
  // Reference outputs of the splitmix64 generator for seed 0.
  CHECK(c.next() == 0xE220A8397B1DCDAFULL);
  CHECK(c.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 full(1);
  CHECK(gen::erdos_renyi(6, 1.0, full) == gen::complete(6));
  CHECK(gen::erdos_renyi(6, 0.0, full) == gen::empty(6));
}

TEST_CASE("graph6 encoding") {
  CHECK(write_graph6(parse_graph6("D?{")) == "D?{");
  const std::string p3 = write_graph6(gen::path(3));
  CHECK(p3 == "Bg");
  CHECK(parse_graph6(p3) == gen::path(3));
  CHECK(parse_graph6("A_") == gen::complete(2));
  CHECK(parse_graph6(">>graph6<<A_\n") == gen::complete(2));
  CHECK(parse_graph6("@").order() == 1);

  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("B"), Error);     // body too short
  CHECK_THROWS_AS(parse_graph6("Bww"), Error);   // body too long
  CHECK_THROWS_AS(parse_graph6("A\x7f"), Error); // byte out of range
  CHECK_THROWS_AS(parse_graph6("A`"), Error);    // nonzero padding

  // Orders above 62 use the four-byte length form.
  const Graph big = gen::cycle(100);
  const std::string s = write_graph6(big);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == big);

  for (const Graph& g : sample_graphs()) CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("graph6 streams report line numbers") {
  std::istringstream good("A_\n\nBg\n");
  CHECK(read_graph6_stream(good).size() == 2);
  std::istringstream bad("A_\nBg\nB\n");
  CHECK_THROWS_WITH(read_graph6_stream(bad), doctest::Contains("line 3"));
  std::ostringstream out;
  write_graph6_stream(out, {gen::complete(2), gen::path(3)});
  CHECK(out.str() == "A_\nBg\n");
}

TEST_CASE("exhaustive enumeration") {
  long connected = 0, all = 0;
  for_each_labeled_graph(5, false, [&](const Graph& g) {
    ++all;
    connected += oracle::connected(g);
  });
  CHECK(all == 1024);
  CHECK(connected == 728);
  long filtered = 0;
  for_each_labeled_graph(5, true, [&](const Graph&) { ++filtered; });
  CHECK(filtered == 728);
  CHECK(graph_from_mask(3, 0b101) == gen::path(3));
  CHECK_THROWS_AS(for_each_labeled_graph(kMaxExhaustiveOrder + 1, false, [](const Graph&) {}), Error);
}

TEST_CASE("connected graphs by edge count cover every class") {
  const auto levels = connected_graphs_by_size(9);
  // Connected graphs with m = 1..9 edges up to isomorphism.
  const std::vector<std::size_t> classes{1, 1, 3, 5, 12, 30, 79, 227, 710};
  REQUIRE(levels.size() == classes.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    CHECK(levels[i].size() == classes[i]);
    for (const Graph& g : levels[i]) {
      CHECK(g.size() == static_cast<int>(i + 1));
      CHECK(oracle::connected(g));
    }
  }
  // Every labeled connected graph on 5 vertices is isomorphic to a listed one.
  std::vector<Graph> five;
  for (const auto& level : levels)
    for (const Graph& g : level)
      if (g.order() == 5) five.push_back(g);
  bool covered = true;
  for_each_labeled_graph(5, true, [&](const Graph& g) {
    if (g.size() > 7) return;
    covered = covered && std::any_of(five.begin(), five.end(), [&](const Graph& h) { return isomorphic(g, h); });
  });
  CHECK(covered);
}
