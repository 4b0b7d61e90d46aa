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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbound/graph.hpp"
#include "qbound/spectral.hpp"
#include "qbound/ysolver.hpp"

namespace qbound {

enum class Side { kUpper, kLower, kInfo };
enum class Target { kMu, kQ, kOmega, kPhi, kNone };

std::string_view to_string(Side side);
std::string_view to_string(Target target);

/// One named bound evaluated on one graph. `target_value`, `exact` and
/// `sound` are filled in once the bounded quantity is known.
struct BoundEntry {
  std::string name;
  double value = 0.0;
  Side side = Side::kInfo;
  Target target = Target::kNone;
  /// A strict inequality (value < target) rather than value <= target.
  bool strict = false;
  std::optional<double> target_value;
  bool exact = false;
  bool sound = true;
};

inline BoundEntry make_entry(std::string name, double value, Side side, Target target, bool strict = false) {
  BoundEntry e;
  e.name = std::move(name);
  e.value = value;
  e.side = side;
  e.target = target;
  e.strict = strict;
  return e;
}

struct BoundReport {
  std::string graph_id;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(std::string_view name) const;
  void add(std::vector<BoundEntry> more);
};

/// Sets target_value, exact (|value - target| <= tol) and sound for every
/// entry whose target is known. Strict entries are sound when
/// value < target + strict_slack.
void annotate(BoundReport& report, Target target, double target_value, double tol, double strict_slack = 1e-9);

// ---------------------------------------------------------------------------
// Prefix families.
//
// Both families evaluate, for a non-increasing sequence s_1..s_len,
//   b_k = (s_k - 1 + sqrt((s_k + 1)^2 + 4 sum_{i<k} (s_i - s_k))) / 2,
// on graph degrees (phi_k, bounding mu) or on line-graph degrees
// (psi_k = 2 + b_k, bounding q). The discriminant is formed in integers.
// ---------------------------------------------------------------------------

/// Minimiser of a prefix family. `ell` is the smallest index in [3, len]
/// with s_1 + ... + s_ell < ell(ell - 1), or len when there is none;
/// `value` is the family at ell. `scan_k`/`scan_value` come from a direct scan.
struct FamilyMin {
  int ell = 1;
  double value = 0.0;
  int scan_k = 1;
  double scan_value = 0.0;
};

/// Throws Error unless 1 <= k <= n.
double phi_k(const DegreeSequence& ds, int k);
FamilyMin phi_min(const DegreeSequence& ds);
/// Regular, or n-1 = d_1 = d_{t-1} > d_t = d_n for some 2 <= t <= k.
bool phi_equality_holds(const DegreeSequence& ds, int k);

/// Throws Error unless 1 <= k <= m.
double psi_k(const LineDegreeSequence& lds, int k);
FamilyMin psi_min(const LineDegreeSequence& lds);
/// Delta_1 = Delta_m, or m-1 = Delta_1 = Delta_{t-1} > Delta_t = Delta_m for some 2 <= t <= k.
bool psi_equality_holds(const LineDegreeSequence& lds, int k);

/// (d_2 - 1 + sqrt((d_2 - 1)^2 + 4 d_1)) / 2; n >= 2.
double two_degree_mu_bound(const DegreeSequence& ds);
/// 2 + Delta_1.
double edge_degree_q_bound(const LineDegreeSequence& lds);
/// 2 + (Delta_2 - 1 + sqrt((Delta_2 - 1)^2 + 4 Delta_1)) / 2; m >= 2.
double two_edge_degree_q_bound(const LineDegreeSequence& lds);

/// min(2 Delta, (Delta + 2 delta - 1 + sqrt((Delta + 2 delta - 1)^2 + 16m - 8(n - 1 + Delta) delta)) / 2).
double nikiforov_q_bound(const DegreeSequence& ds);
double nikiforov_q_bound(const Graph& g);

// ---------------------------------------------------------------------------
// Clique and irregularity bounds.
// ---------------------------------------------------------------------------

/// Denominators at or below this are treated as the complete-graph limit.
inline constexpr double kDenominatorGuard = 1e-9;
/// Slack used when rounding real lower bounds up to integers.
inline constexpr double kIntegerSlack = 1e-9;

/// Turan n/(n-d), n/(n-y+1) - 1/3 (strict), Wilf n/(n-mu) and 2m/(2m-mu^2),
/// each also rounded up to an integer lower bound on omega; plus the raw
/// ratio n/(n-y+1) as an informational entry. Requires m >= 1.
std::vector<BoundEntry> clique_lower_bounds(const Graph& g, const YSolution& y, const SpectralValue& mu);

/// n/(n - d), the generalised r-partite lower bound (same formula as Turan).
double average_degree_ratio(const DegreeSequence& ds);

struct Irregularity {
  double nu = 1.0;
};

/// nu = n sum d_i^2 / (4 m^2). Throws Error when m = 0.
Irregularity irregularity(const DegreeSequence& ds);

/// 2 mu, 4 m sqrt(nu) / n and 4 m nu / n (= sum d_i^2 / m). Requires m >= 1.
std::vector<BoundEntry> q_lower_bounds(const Graph& g, const SpectralValue& mu);

}  // namespace qbound
