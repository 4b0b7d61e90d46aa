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


#include <benchmark/benchmark.h>

#include "qbound/graph6.hpp"
#include "qbound/harness.hpp"

namespace {

using namespace qbound;

Graph random_graph(int n, double p, std::uint64_t seed = 1) {
  SplitMix64 rng(seed);
  return gen::erdos_renyi(n, p, rng);
}

void BM_Mu(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(mu(g).value);
}
BENCHMARK(BM_Mu)->Arg(50)->Arg(200)->Arg(800);

void BM_QIndex(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(q_index(g).value);
}
BENCHMARK(BM_QIndex)->Arg(50)->Arg(200)->Arg(800);

// Bipartite graphs converge slowest without the shift.
void BM_MuPath(benchmark::State& state) {
  const Graph g = gen::path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu(g).value);
}
BENCHMARK(BM_MuPath)->Arg(16)->Arg(64);

void BM_SolveY(benchmark::State& state) {
  const DegreeSequence ds = degree_sequence(random_graph(static_cast<int>(state.range(0)), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(solve_y(ds).y);
}
BENCHMARK(BM_SolveY)->Arg(100)->Arg(1000)->Arg(4000);

void BM_PsiMin(benchmark::State& state) {
  const LineDegreeSequence lds = line_degree_sequence(random_graph(static_cast<int>(state.range(0)), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(psi_min(lds).value);
}
BENCHMARK(BM_PsiMin)->Arg(50)->Arg(200);

void BM_LineGraph(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(line_graph(g).size());
}
BENCHMARK(BM_LineGraph)->Arg(30)->Arg(100);

void BM_CliqueNumber(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g).size());
}
BENCHMARK(BM_CliqueNumber)->Arg(24)->Arg(48)->Arg(64);

void BM_PhiNumber(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(phi_number(g).r());
}
BENCHMARK(BM_PhiNumber)->Arg(8)->Arg(11)->Arg(14);

void BM_Graph6Roundtrip(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(write_graph6(g)).size());
}
BENCHMARK(BM_Graph6Roundtrip)->Arg(60)->Arg(500);

void BM_VerifyExhaustive(benchmark::State& state) {
  const CorpusSpec corpus = CorpusSpec::exhaustive(static_cast<int>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(verify_corpus(corpus).graphs);
}
BENCHMARK(BM_VerifyExhaustive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
