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

#include "qbound/graph.hpp"

namespace qbound {

/// Root of y(y-1) = sum_{k<=floor(y)} d_k + (y - floor(y)) d_{ceil(y)} on [1, n].
///
/// `a` is the breakpoint: y == a when the root is an integer, otherwise
/// a < y < a + 1. `c` is the prefix sum d_1 + ... + d_a. `residual` is the
/// absolute defect of the defining equation at the returned y.
struct YSolution {
  double y = 1.0;
  int a = 1;
  std::int64_t c = 0;
  double residual = 0.0;

  bool integral() const { return y == static_cast<double>(a); }
};

/// Two-step solve on any non-increasing sequence: an exact integer scan that
/// brackets the root, then the closed-form root of the quadratic on the
/// bracketing segment. Throws Error if the sequence is empty or unsorted.
YSolution solve_implicit(std::span<const int> sorted_desc);

/// Defect |y(y-1) - S(y)| of the defining equation, evaluated in extended precision.
double implicit_residual(std::span<const int> sorted_desc, double y);

inline YSolution solve_y(const DegreeSequence& ds) { return solve_implicit(ds.values()); }

/// The same equation on line-graph degrees; bounds q <= z + 1.
inline YSolution solve_z(const LineDegreeSequence& lds) { return solve_implicit(lds.values()); }

/// mu <= y - 1.
inline double y_upper_bound_mu(const DegreeSequence& ds) { return solve_y(ds).y - 1.0; }

}  // namespace qbound
