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

#include <fstream>
#include <iostream>

#include "qbound/enumerate.hpp"
#include "qbound/graph6.hpp"
#include "qbound/harness.hpp"

namespace qbound {

CorpusSpec CorpusSpec::graph6_file(std::string path) {
  CorpusSpec s;
  s.kind = Kind::kGraph6File;
  s.path = std::move(path);
  return s;
}

CorpusSpec CorpusSpec::exhaustive(int n, bool connected_only) {
  CorpusSpec s;
  s.kind = Kind::kExhaustive;
  s.n = n;
  s.connected_only = connected_only;
  return s;
}

CorpusSpec CorpusSpec::random(int n, double p, int count, std::uint64_t seed) {
  CorpusSpec s;
  s.kind = Kind::kRandom;
  s.n = n;
  s.edge_probability = p;
  s.count = count;
  s.seed = seed;
  return s;
}

CorpusSpec CorpusSpec::named_list(std::vector<FamilySpec> families) {
  CorpusSpec s;
  s.kind = Kind::kNamed;
  s.named = std::move(families);
  return s;
}

std::vector<Graph> random_graphs(int n, double p, int count, std::uint64_t seed) {
  if (count < 0) throw Error("random: count must be >= 0");
  SplitMix64 rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(gen::erdos_renyi(n, p, rng));
  return out;
}

void for_each_graph(const CorpusSpec& spec, const std::function<void(const CorpusEntry&)>& visit) {
  auto emit = [&](std::string id, const Graph& g) {
    if (spec.irregular_only && degree_sequence(g).is_constant()) return;
    visit(CorpusEntry{std::move(id), g});
  };
  switch (spec.kind) {
    case CorpusSpec::Kind::kGraph6File: {
      std::vector<Graph> graphs;
      if (spec.path == "-") {
        graphs = read_graph6_stream(std::cin);
      } else {
        std::ifstream in(spec.path);
        if (!in) throw Error("cannot open '" + spec.path + "'");
        graphs = read_graph6_stream(in);
      }
      for (const Graph& g : graphs) emit(write_graph6(g), g);
      break;
    }
    case CorpusSpec::Kind::kExhaustive:
      for_each_labeled_graph(spec.n, spec.connected_only, [&](const Graph& g) { emit(write_graph6(g), g); });
      break;
    case CorpusSpec::Kind::kRandom:
      for (const Graph& g : random_graphs(spec.n, spec.edge_probability, spec.count, spec.seed)) {
        emit(write_graph6(g), g);
      }
      break;
    case CorpusSpec::Kind::kNamed:
      for (const FamilySpec& f : spec.named) emit(family_id(f), generate(f));
      break;
  }
}

std::vector<CorpusEntry> load_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  for_each_graph(spec, [&](const CorpusEntry& e) { out.push_back(e); });
  return out;
}

}  // namespace qbound
