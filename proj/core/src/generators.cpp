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

#include "qbound/generators.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

namespace qbound {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

namespace gen {

Graph empty(int n) {
  require(n >= 1, "empty: n must be >= 1");
  return Graph(n);
}

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph star(int n) {
  require(n >= 2, "star: n must be >= 2");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return Graph(n, std::move(e));
}

Graph wheel(int n) {
  require(n >= 4, "wheel: n must be >= 4");
  std::vector<Edge> e;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    e.push_back({0, i + 1});
    e.push_back({i + 1, (i + 1) % rim + 1});
  }
  return Graph(n, std::move(e));
}

Graph complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "bipartite: both sides must be >= 1");
  const int sizes[] = {s, t};
  return complete_multipartite(sizes);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  require(!part_sizes.empty(), "multipartite: need at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "multipartite: part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph k13plus() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

Graph circulant_regular(int n, int d) {
  require(n >= 1 && d >= 0 && d < n, "regular: need 0 <= d < n");
  require(d % 2 == 0 || n % 2 == 0, "regular: odd degree needs even n");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= d / 2; ++s) {
      e.push_back({i, (i + s) % n});
    }
    if (d % 2 == 1 && i < n / 2) e.push_back({i, i + n / 2});
  }
  return Graph(n, std::move(e));
}

Graph double_star(int a, int b) {
  require(a >= 0 && b >= 0, "doublestar: leaf counts must be >= 0");
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; ++i) e.push_back({0, next++});
  for (int i = 0; i < b; ++i) e.push_back({1, next++});
  return Graph(next, std::move(e));
}

Graph erdos_renyi(int n, double p, SplitMix64& rng) {
  require(n >= 1, "random: n must be >= 1");
  require(p >= 0.0 && p <= 1.0, "random: p must lie in [0,1]");
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.uniform() < p) e.push_back({i, j});
  return Graph(n, std::move(e));
}

}  // namespace gen

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  const auto open = text.find('(');
  spec.name = std::string(text.substr(0, open));
  if (spec.name.empty()) throw Error("family spec '" + std::string(text) + "' has no name");
  if (open == std::string_view::npos) return spec;
  if (text.back() != ')') throw Error("family spec '" + std::string(text) + "' is missing ')'");
  std::string_view args = text.substr(open + 1, text.size() - open - 2);
  while (!args.empty()) {
    const auto comma = args.find(',');
    const std::string token(args.substr(0, comma));
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw Error("family spec: bad parameter '" + token + "'");
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return spec;
}

std::string family_id(const FamilySpec& spec) {
  if (spec.params.empty()) return spec.name;
  std::string id = spec.name + "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) id += ",";
    const double v = spec.params[i];
    if (v == std::floor(v)) {
      id += std::to_string(static_cast<long long>(v));
    } else {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
      id.append(buf, end);
    }
  }
  return id + ")";
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    if (p.size() != k) {
      throw Error(spec.name + ": expected " + std::to_string(k) + " parameter(s), got " + std::to_string(p.size()));
    }
  };
  auto integer = [&](std::size_t i) {
    const double v = p[i];
    if (v != std::floor(v) || std::abs(v) > 1e9) throw Error(spec.name + ": parameter " + std::to_string(i + 1) + " must be an integer");
    return static_cast<int>(v);
  };
  const std::string& f = spec.name;
  if (f == "empty") return arity(1), gen::empty(integer(0));
  if (f == "path") return arity(1), gen::path(integer(0));
  if (f == "cycle") return arity(1), gen::cycle(integer(0));
  if (f == "complete") return arity(1), gen::complete(integer(0));
  if (f == "star") return arity(1), gen::star(integer(0));
  if (f == "wheel") return arity(1), gen::wheel(integer(0));
  if (f == "bipartite") return arity(2), gen::complete_bipartite(integer(0), integer(1));
  if (f == "multipartite") {
    if (p.empty()) throw Error("multipartite: expected part sizes");
    std::vector<int> sizes;
    for (std::size_t i = 0; i < p.size(); ++i) sizes.push_back(integer(i));
    return gen::complete_multipartite(sizes);
  }
  if (f == "k13plus") return arity(0), gen::k13plus();
  if (f == "regular") return arity(2), gen::circulant_regular(integer(0), integer(1));
  if (f == "doublestar") return arity(2), gen::double_star(integer(0), integer(1));
  if (f == "random") {
    arity(2);
    SplitMix64 rng(spec.seed);
    return gen::erdos_renyi(integer(0), p[1], rng);
  }
  throw Error("unknown family '" + f + "'");
}

}  // namespace qbound
