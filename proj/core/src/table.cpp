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

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qbound/harness.hpp"

namespace qbound {

namespace {

constexpr double kWinMargin = 1e-9;

}  // namespace

ComparisonRow comparison_row(const Graph& g, std::string id, double tol) {
  if (g.size() == 0) throw Error("comparison_row: no edges");
  const DegreeSequence ds = degree_sequence(g);
  const LineDegreeSequence lds = line_degree_sequence(g);
  const FamilyMin fm = psi_min(lds);
  ComparisonRow row;
  row.graph_id = std::move(id);
  row.n = g.order();
  row.m = g.size();
  row.q = q_index(g, tol).value;
  row.thm1 = nikiforov_q_bound(ds);
  row.psi1 = psi_k(lds, 1);
  if (row.m >= 2) row.psi2 = psi_k(lds, 2);
  row.psi_min = fm.value;
  row.ell = fm.ell;
  row.z_plus_1 = solve_z(lds).y + 1.0;
  return row;
}

ComparisonTable comparison_table(const CorpusSpec& corpus, double tol) {
  ComparisonTable t;
  double sum_q = 0, sum_thm1 = 0, sum_psi1 = 0, sum_psi2 = 0, sum_min = 0, sum_z = 0;
  long psi2_count = 0;
  for_each_graph(corpus, [&](const CorpusEntry& e) {
    if (e.graph.size() == 0) return;  // no line graph
    ComparisonRow row = comparison_row(e.graph, e.id, tol);
    sum_q += row.q;
    sum_thm1 += row.thm1;
    sum_psi1 += row.psi1;
    if (row.psi2) {
      sum_psi2 += *row.psi2;
      ++psi2_count;
    }
    sum_min += row.psi_min;
    sum_z += row.z_plus_1;
    if (row.thm1 < row.psi_min - kWinMargin) {
      if (t.thm1_better++ == 0) t.first_thm1_better = row.graph_id;
    } else if (row.psi_min < row.thm1 - kWinMargin) {
      if (t.psi_min_better++ == 0) t.first_psi_min_better = row.graph_id;
    }
    t.rows.push_back(std::move(row));
  });
  t.means.graph_id = "mean";
  if (!t.rows.empty()) {
    const double k = static_cast<double>(t.rows.size());
    t.means.q = sum_q / k;
    t.means.thm1 = sum_thm1 / k;
    t.means.psi1 = sum_psi1 / k;
    if (psi2_count) t.means.psi2 = sum_psi2 / static_cast<double>(psi2_count);
    t.means.psi_min = sum_min / k;
    t.means.z_plus_1 = sum_z / k;
  }
  return t;
}

void write_table_csv(std::ostream& out, const ComparisonTable& table) {
  fmt::print(out, "graph_id,n,m,q,thm1,psi1,psi2,psi_min,ell,z_plus_1\n");
  for (const ComparisonRow& r : table.rows) {
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{}\n", r.graph_id, r.n, r.m, r.q, r.thm1, r.psi1,
               r.psi2 ? fmt::format("{}", *r.psi2) : "", r.psi_min, r.ell, r.z_plus_1);
  }
  const ComparisonRow& m = table.means;
  fmt::print(out, "mean,,,{:.4f},{:.4f},{:.4f},{},{:.4f},,{:.4f}\n", m.q, m.thm1, m.psi1,
             m.psi2 ? fmt::format("{:.4f}", *m.psi2) : "", m.psi_min, m.z_plus_1);
}

void write_table_text(std::ostream& out, const ComparisonTable& table) {
  fmt::print(out, "{:<20} {:>4} {:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>4} {:>10}\n", "graph", "n", "m", "q",
             "thm1", "psi1", "psi2", "psi_min", "ell", "z+1");
  for (const ComparisonRow& r : table.rows) {
    fmt::print(out, "{:<20} {:>4} {:>4} {:>10.4f} {:>10.4f} {:>10.4f} {:>10} {:>10.4f} {:>4} {:>10.4f}\n", r.graph_id,
               r.n, r.m, r.q, r.thm1, r.psi1, r.psi2 ? fmt::format("{:.4f}", *r.psi2) : "-", r.psi_min, r.ell,
               r.z_plus_1);
  }
  const ComparisonRow& m = table.means;
  fmt::print(out, "{:<20} {:>4} {:>4} {:>10.4f} {:>10.4f} {:>10.4f} {:>10} {:>10.4f} {:>4} {:>10.4f}\n", "mean", "",
             "", m.q, m.thm1, m.psi1, m.psi2 ? fmt::format("{:.4f}", *m.psi2) : "-", m.psi_min, "", m.z_plus_1);
  fmt::print(out, "\n{} graphs; thm1 strictly tighter than psi_min on {}{}; psi_min strictly tighter on {}{}\n",
             table.rows.size(), table.thm1_better,
             table.first_thm1_better.empty() ? "" : " (e.g. " + table.first_thm1_better + ")", table.psi_min_better,
             table.first_psi_min_better.empty() ? "" : " (e.g. " + table.first_psi_min_better + ")");
}

}  // namespace qbound
