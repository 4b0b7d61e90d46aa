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

#include "qbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace qbound {

std::string_view to_string(Side side) {
  switch (side) {
    case Side::kUpper: return "upper";
    case Side::kLower: return "lower";
    case Side::kInfo: return "info";
  }
  return "?";
}

std::string_view to_string(Target target) {
  switch (target) {
    case Target::kMu: return "mu";
    case Target::kQ: return "q";
    case Target::kOmega: return "omega";
    case Target::kPhi: return "phi";
    case Target::kNone: return "none";
  }
  return "?";
}

const BoundEntry* BoundReport::find(std::string_view name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const BoundEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

void BoundReport::add(std::vector<BoundEntry> more) {
  entries.insert(entries.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

void annotate(BoundReport& report, Target target, double target_value, double tol, double strict_slack) {
  for (BoundEntry& e : report.entries) {
    if (e.target != target || e.side == Side::kInfo) continue;
    e.target_value = target_value;
    e.exact = std::abs(e.value - target_value) <= tol;
    if (e.side == Side::kUpper) {
      e.sound = e.value >= target_value - tol;
    } else if (e.strict) {
      e.sound = e.value < target_value + strict_slack;
    } else {
      e.sound = e.value <= target_value + tol;
    }
  }
}

namespace {

std::int64_t prefix_sum(std::span<const int> s, int count) {
  std::int64_t total = 0;
  for (int i = 0; i < count; ++i) total += s[static_cast<std::size_t>(i)];
  return total;
}

// (s_k - 1 + sqrt(disc)) / 2 with disc = (s_k + 1)^2 + 4 sum_{i<k} (s_i - s_k);
// `before` is sum_{i<k} s_i.
double bound_at(std::int64_t before, std::int64_t sk, int k) {
  const std::int64_t excess = before - (k - 1) * sk;
  const std::int64_t disc = (sk + 1) * (sk + 1) + 4 * excess;
  return (static_cast<double>(sk - 1) + std::sqrt(static_cast<double>(disc))) / 2.0;
}

double prefix_bound(std::span<const int> s, int k) {
  return bound_at(prefix_sum(s, k - 1), s[static_cast<std::size_t>(k - 1)], k);
}

void check_index(int k, int len, const char* what) {
  if (k < 1 || k > len) {
    throw Error(std::string(what) + ": k = " + std::to_string(k) + " outside [1, " + std::to_string(len) + "]");
  }
}

// The edge family is the vertex family shifted by 2.
FamilyMin family_min(std::span<const int> s, double shift) {
  const int len = static_cast<int>(s.size());
  FamilyMin out;
  out.ell = len;
  std::int64_t running = prefix_sum(s, std::min(len, 2));
  for (int ell = 3; ell <= len; ++ell) {
    running += s[static_cast<std::size_t>(ell - 1)];
    if (running < static_cast<std::int64_t>(ell) * (ell - 1)) {
      out.ell = ell;
      break;
    }
  }
  out.value = prefix_bound(s, out.ell) + shift;
  out.scan_k = 1;
  out.scan_value = prefix_bound(s, 1) + shift;
  std::int64_t before = s[0];
  for (int k = 2; k <= len; ++k) {
    const double v = bound_at(before, s[static_cast<std::size_t>(k - 1)], k) + shift;
    if (v < out.scan_value) {
      out.scan_value = v;
      out.scan_k = k;
    }
    before += s[static_cast<std::size_t>(k - 1)];
  }
  return out;
}

bool prefix_equality(std::span<const int> s, int k) {
  const int len = static_cast<int>(s.size());
  if (s.front() == s.back()) return true;
  // Need s_1 = ... = s_{t-1} = len - 1 > s_t = ... = s_len with 2 <= t <= k.
  int top = 0;
  while (top < len && s[static_cast<std::size_t>(top)] == len - 1) ++top;
  if (top == 0 || top + 1 > k || top == len) return false;
  return s[static_cast<std::size_t>(top)] == s.back();
}

}  // namespace

double phi_k(const DegreeSequence& ds, int k) {
  check_index(k, ds.size(), "phi_k");
  return prefix_bound(ds.values(), k);
}

FamilyMin phi_min(const DegreeSequence& ds) {
  if (ds.empty()) throw Error("phi_min: empty degree sequence");
  return family_min(ds.values(), 0.0);
}

bool phi_equality_holds(const DegreeSequence& ds, int k) {
  check_index(k, ds.size(), "phi_equality_holds");
  return prefix_equality(ds.values(), k);
}

double psi_k(const LineDegreeSequence& lds, int k) {
  check_index(k, lds.size(), "psi_k");
  // 1 + (s_k + 1 + sqrt(disc)) / 2, the vertex formula plus 2.
  return prefix_bound(lds.values(), k) + 2.0;
}

FamilyMin psi_min(const LineDegreeSequence& lds) {
  if (lds.size() == 0) throw Error("psi_min: no edges");
  return family_min(lds.values(), 2.0);
}

bool psi_equality_holds(const LineDegreeSequence& lds, int k) {
  check_index(k, lds.size(), "psi_equality_holds");
  return prefix_equality(lds.values(), k);
}

double two_degree_mu_bound(const DegreeSequence& ds) {
  if (ds.size() < 2) throw Error("two_degree_mu_bound: needs n >= 2");
  const std::int64_t d1 = ds.d(1);
  const std::int64_t d2 = ds.d(2);
  return (static_cast<double>(d2 - 1) + std::sqrt(static_cast<double>((d2 - 1) * (d2 - 1) + 4 * d1))) / 2.0;
}

double edge_degree_q_bound(const LineDegreeSequence& lds) {
  if (lds.size() == 0) throw Error("no edges");
  return 2.0 + lds.d(1);
}

double two_edge_degree_q_bound(const LineDegreeSequence& lds) {
  if (lds.size() < 2) throw Error("two_edge_degree_q_bound: needs m >= 2");
  const std::int64_t e1 = lds.d(1);
  const std::int64_t e2 = lds.d(2);
  return 2.0 + (static_cast<double>(e2 - 1) + std::sqrt(static_cast<double>((e2 - 1) * (e2 - 1) + 4 * e1))) / 2.0;
}

double nikiforov_q_bound(const DegreeSequence& ds) {
  const std::int64_t n = ds.size();
  const std::int64_t m = ds.sum() / 2;
  const std::int64_t big = ds.max();
  const std::int64_t small = ds.min();
  const std::int64_t lead = big + 2 * small - 1;
  const std::int64_t disc = lead * lead + 16 * m - 8 * (n - 1 + big) * small;
  if (disc < 0) throw Error("nikiforov_q_bound: negative discriminant; not a graphic degree sequence");
  const double second = (static_cast<double>(lead) + std::sqrt(static_cast<double>(disc))) / 2.0;
  return std::min(2.0 * static_cast<double>(big), second);
}

double nikiforov_q_bound(const Graph& g) { return nikiforov_q_bound(degree_sequence(g)); }

double average_degree_ratio(const DegreeSequence& ds) {
  const auto n = static_cast<std::int64_t>(ds.size());
  // n / (n - 2m/n) = n^2 / (n^2 - 2m); the denominator is positive for simple graphs.
  return static_cast<double>(n * n) / static_cast<double>(n * n - ds.sum());
}

std::vector<BoundEntry> clique_lower_bounds(const Graph& g, const YSolution& y, const SpectralValue& mu) {
  if (g.size() == 0) throw Error("clique_lower_bounds: no edges");
  const double n = g.order();
  const double two_m = 2.0 * g.size();
  auto guarded = [&](double numerator, double denominator) {
    return denominator <= kDenominatorGuard ? n : numerator / denominator;
  };
  auto lower = [](std::string name, double value, bool strict = false) {
    return make_entry(std::move(name), value, Side::kLower, Target::kOmega, strict);
  };
  auto rounded = [&](const BoundEntry& e) {
    return lower(e.name + "_int", std::ceil(e.value - kIntegerSlack));
  };

  const double ratio = guarded(n, n - y.y + 1.0);
  std::vector<BoundEntry> out;
  out.push_back(lower("turan", average_degree_ratio(degree_sequence(g))));
  out.push_back(lower("y_clique", ratio - 1.0 / 3.0, true));
  out.push_back(lower("wilf", guarded(n, n - mu.value)));
  out.push_back(lower("nikiforov_clique", guarded(two_m, two_m - mu.value * mu.value)));
  const std::size_t reals = out.size();
  for (std::size_t i = 0; i < reals; ++i) out.push_back(rounded(out[i]));
  out.push_back(make_entry("y_ratio", ratio, Side::kInfo, Target::kNone));
  return out;
}

Irregularity irregularity(const DegreeSequence& ds) {
  const std::int64_t two_m = ds.sum();
  if (two_m == 0) throw Error("irregularity: no edges");
  // n sum d^2 / (4 m^2) = n sum d^2 / (2m)^2
  const double nu = static_cast<double>(ds.size()) * static_cast<double>(ds.sum_of_squares()) /
                    (static_cast<double>(two_m) * static_cast<double>(two_m));
  return {nu};
}

std::vector<BoundEntry> q_lower_bounds(const Graph& g, const SpectralValue& mu) {
  if (g.size() == 0) throw Error("q_lower_bounds: no edges");
  const DegreeSequence ds = degree_sequence(g);
  const double nu = irregularity(ds).nu;
  const double n = g.order();
  const double m = g.size();
  return {
      make_entry("two_mu", 2.0 * mu.value, Side::kLower, Target::kQ),
      make_entry("hofmeister_q", 4.0 * m * std::sqrt(nu) / n, Side::kLower, Target::kQ),
      // 4 m nu / n, evaluated as the equal integer ratio sum d^2 / m.
      make_entry("irregularity_q", static_cast<double>(ds.sum_of_squares()) / m, Side::kLower, Target::kQ),
  };
}

}  // namespace qbound
