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

#include "qbound/ysolver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace qbound {

double implicit_residual(std::span<const int> d, double y) {
  const auto n = static_cast<long double>(d.size());
  const long double t = std::clamp(static_cast<long double>(y), 0.0L, n);
  const auto whole = static_cast<std::size_t>(std::floor(t));
  long double s = 0;
  for (std::size_t k = 0; k < whole && k < d.size(); ++k) s += d[k];
  const long double frac = t - static_cast<long double>(whole);
  if (frac > 0 && whole < d.size()) s += frac * d[whole];
  return static_cast<double>(std::fabs(t * (t - 1) - s));
}

YSolution solve_implicit(std::span<const int> d) {
  if (d.empty()) throw Error("solve_implicit: empty sequence");
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>())) throw Error("solve_implicit: sequence not non-increasing");
  const int n = static_cast<int>(d.size());
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) prefix[static_cast<std::size_t>(k) + 1] = prefix[static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)];
  auto gap = [&](int y) { return static_cast<std::int64_t>(y) * (y - 1) - prefix[static_cast<std::size_t>(y)]; };

  // Step 1: the root is at least the average plus one, so start there.
  int y = static_cast<int>(std::clamp<std::int64_t>(1 + prefix.back() / n, 1, n));
  while (y > 1 && gap(y - 1) >= 0) --y;
  while (y < n && gap(y) < 0) ++y;

  YSolution sol;
  if (gap(y) <= 0) {
    // Exact integer root, or y = n when the scan runs out.
    sol.y = y;
    sol.a = y;
    sol.c = prefix[static_cast<std::size_t>(y)];
  } else {
    // Step 2: a < y < a + 1 solves y^2 - (1 + d_{a+1}) y - (c - a d_{a+1}) = 0.
    const int a = y - 1;
    const std::int64_t c = prefix[static_cast<std::size_t>(a)];
    const std::int64_t next = d[static_cast<std::size_t>(a)];
    const std::int64_t disc = (next + 1) * (next + 1) + 4 * (c - a * next);
    sol.y = static_cast<double>((static_cast<long double>(next + 1) + std::sqrt(static_cast<long double>(disc))) / 2);
    sol.a = a;
    sol.c = c;
  }
  sol.residual = implicit_residual(d, sol.y);
  return sol;
}

}  // namespace qbound
