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

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qbound/graph6.hpp"
#include "qbound/harness.hpp"

namespace qbound {

namespace {

constexpr double kExactFormula = 1e-12;
constexpr double kResidualLimit = 1e-9;

class Tally {
 public:
  void check(const std::string& name, bool ok, const std::string& graph6) {
    InvariantTally& t = slot(name);
    if (ok) {
      ++t.passed;
    } else {
      if (t.failed++ == 0) t.first_counterexample = graph6;
    }
  }
  void skip(const std::string& name) { ++slot(name).skipped; }
  std::vector<InvariantTally> take() { return std::move(order_); }

 private:
  InvariantTally& slot(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, order_.size());
    if (inserted) {
      InvariantTally t;
      t.name = name;
      order_.push_back(std::move(t));
    }
    return order_[it->second];
  }

  std::unordered_map<std::string, std::size_t> index_;
  std::vector<InvariantTally> order_;
};

bool is_complete_bipartite(const Graph& g) {
  if (g.size() == 0 || !is_connected(g)) return false;
  // 2-colour by BFS from vertex 0; complete bipartite iff bipartite and m = |A| |B|.
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue{0};
  side[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (side[static_cast<std::size_t>(w)] < 0) {
        side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
        queue.push_back(w);
      } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
        return false;
      }
    }
  }
  const long a = std::count(side.begin(), side.end(), 0);
  return a * (g.order() - a) == g.size();
}

class GraphVerifier {
 public:
  GraphVerifier(const VerifyOptions& opt, Tally& tally) : opt_(opt), tally_(tally) {}

  void run(const Graph& g) {
    g6_ = write_graph6(g);
    const int n = g.order();
    const int m = g.size();
    const DegreeSequence ds = degree_sequence(g);
    const double tol = opt_.check_tol;

    check("graph.degree_sum", ds.sum() == 2 * static_cast<std::int64_t>(m));
    bool symmetric = true;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) symmetric = symmetric && w != v && g.adjacent(w, v);
    check("graph.adjacency_symmetric", symmetric);
    check("graph6.roundtrip", parse_graph6(g6_) == g && write_graph6(parse_graph6(g6_)) == g6_);

    SpectralValue mu_v, q_v;
    try {
      mu_v = mu(g, opt_.tol);
      q_v = q_index(g, opt_.tol);
    } catch (const SpectralError&) {
      check("spectral.converged", false);
      return;
    }
    check("spectral.converged", true);
    check("spectral.mu_certified", mu_v.residual <= opt_.tol && mu_v.value >= 0);
    check("spectral.q_certified", q_v.residual <= opt_.tol && q_v.value >= 0);
    const double mu_ = mu_v.value;
    const double q = q_v.value;
    check("spectral.q_ge_2mu", q >= 2 * mu_ + fault("two_mu") - 4 * opt_.tol - tol);
    check("spectral.hofmeister", mu_ * mu_ >= static_cast<double>(ds.sum_of_squares()) / n - tol);
    check("spectral.average_degree", ds.average() <= mu_ + tol);

    const YSolution y = solve_y(ds);
    const double y_bound = y.y + fault("y");
    check("ysolver.y_range", y.y >= 1.0 && y.y <= n);
    check("ysolver.y_residual", y.residual <= kResidualLimit);
    check("ysolver.mu_le_y_minus_1", mu_ <= y_bound - 1.0 + tol);

    const FamilyMin fm = phi_min(ds);
    check("ysolver.y_equals_phi_min", std::abs(y_bound - 1.0 - fm.value) <= kResidualLimit);
    bool phi_sound = true, phi_forward = true;
    for (int k = 1; k <= n; ++k) {
      const double phi = phi_k(ds, k) + fault("phi_k");
      phi_sound = phi_sound && mu_ <= phi + tol;
      if (phi_equality_holds(ds, k)) phi_forward = phi_forward && std::abs(mu_ - phi) <= tol;
    }
    check("bounds.phi_k_sound", phi_sound);
    check("bounds.phi_min_scan", std::abs(fm.value - fm.scan_value) <= kExactFormula);
    check("bounds.phi_equality_forward", phi_forward);
    if (n >= 2) check("bounds.two_degree_is_phi2", std::abs(two_degree_mu_bound(ds) - phi_k(ds, 2)) <= kExactFormula);

    const bool regular = ds.is_constant();
    if (regular) {
      const double d = ds.max();
      check("bounds.regular_exact", std::abs(mu_ - d) <= tol && std::abs(y.y - 1.0 - d) <= tol &&
                                        std::abs(q - 2 * d) <= tol && std::abs(nikiforov_q_bound(ds) - q) <= tol);
    }

    if (m >= 1) check_edges(g, ds, mu_, q);

    if (n > std::min(opt_.max_exact_n, kCliqueSearchLimit)) {
      for (const char* name : {"partite.clique_certificate", "bounds.clique_sound", "partite.phi_certificate",
                               "partite.phi_le_omega", "partite.avg_ratio_le_phi", "partite.y_ratio_lt_phi_third",
                               "partite.mu_ratio_lt_phi_third", "partite.mu_ratio_le_y_ratio", "partite.dominates",
                               "partite.omega_star_eq_phi", "partite.y_monotone_under_domination"}) {
        tally_.skip(name);
      }
      return;
    }
    check_partite(g, ds, mu_v, y);
  }

 private:
  void check(const std::string& name, bool ok) { tally_.check(name, ok, g6_); }

  double fault(const std::string& key) const {
    auto it = opt_.fault.find(key);
    return it == opt_.fault.end() ? 0.0 : it->second;
  }

  void check_edges(const Graph& g, const DegreeSequence& ds, double mu_, double q) {
    const double tol = opt_.check_tol;
    const int m = g.size();
    const Graph line = line_graph(g);
    const LineDegreeSequence lds = line_degree_sequence(g);
    check("graph.line_degrees", lds.as_degree_sequence() == degree_sequence(line));
    check("graph.line_graph_size",
          line.order() == m && 2 * static_cast<std::int64_t>(line.size()) == ds.sum_of_squares() - 2 * m);
    try {
      check("spectral.line_graph_identity", std::abs(q - 2.0 - mu(line, opt_.tol).value) <= tol);
    } catch (const SpectralError&) {
      check("spectral.line_graph_identity", false);
    }

    const YSolution z = solve_z(lds);
    const double z_bound = z.y + 1.0 + fault("z_plus_1");
    check("ysolver.z_range", z.y >= 1.0 && z.y <= m);
    check("ysolver.z_residual", z.residual <= kResidualLimit);
    check("ysolver.q_le_z_plus_1", q <= z_bound + tol);

    const FamilyMin pm = psi_min(lds);
    bool psi_sound = true, psi_forward = true;
    for (int k = 1; k <= m; ++k) {
      const double psi = psi_k(lds, k) + fault("psi_k");
      psi_sound = psi_sound && q <= psi + tol;
      if (psi_equality_holds(lds, k)) psi_forward = psi_forward && std::abs(q - psi) <= tol;
    }
    check("bounds.psi_k_sound", psi_sound);
    check("bounds.psi_min_scan", std::abs(pm.value - pm.scan_value) <= kExactFormula);
    check("bounds.psi_equality_forward", psi_forward);
    bool subsumes = std::abs(psi_k(lds, 1) - edge_degree_q_bound(lds)) <= kExactFormula;
    if (m >= 2) subsumes = subsumes && std::abs(psi_k(lds, 2) - two_edge_degree_q_bound(lds)) <= kExactFormula;
    check("bounds.psi_subsumption", subsumes);
    check("bounds.nikiforov_q_sound", q <= nikiforov_q_bound(ds) + fault("nikiforov_q") + tol);

    const double nu = irregularity(ds).nu;
    check("bounds.nu_ge_1", nu >= 1.0 - kExactFormula && ((std::abs(nu - 1.0) <= kExactFormula) == ds.is_constant()));
    const auto lower = q_lower_bounds(g, {mu_, 0.0, 0});
    const double hofmeister = lower[1].value;
    const double irregular = lower[2].value + fault("irregularity_q");
    check("bounds.q_lower_chain", hofmeister <= 2 * mu_ + tol && irregular <= q + tol);
    if (is_complete_bipartite(g)) {
      check("bounds.complete_bipartite_exact", std::abs(q - g.order()) <= tol && std::abs(irregular - q) <= tol &&
                                                   std::abs(psi_k(lds, 1) - q) <= tol);
    }
  }

  void check_partite(const Graph& g, const DegreeSequence& ds, const SpectralValue& mu_v, const YSolution& y) {
    const double tol = opt_.check_tol;
    const CliqueCertificate omega = clique_number(g);
    check("partite.clique_certificate", is_clique(g, omega.vertices) && omega.size() >= 1);
    if (g.size() >= 1) {
      BoundReport report;
      report.entries = clique_lower_bounds(g, y, mu_v);
      annotate(report, Target::kOmega, omega.size(), tol, opt_.strict_slack);
      check("bounds.clique_sound", std::all_of(report.entries.begin(), report.entries.end(),
                                               [](const BoundEntry& e) { return e.sound; }));
    }

    const PartitionCertificate phi = phi_number(g, opt_.max_exact_n);
    check("partite.phi_certificate", is_valid_partition(g, phi));
    const auto checks = partite_inequalities(g, y, mu_v, omega, phi, opt_.strict_slack);
    const char* names[] = {"partite.phi_le_omega", "partite.avg_ratio_le_phi", "partite.y_ratio_lt_phi_third",
                           "partite.mu_ratio_lt_phi_third", "partite.mu_ratio_le_y_ratio"};
    for (std::size_t i = 0; i < checks.size(); ++i) check(names[i], checks[i].holds);

    const Graph star = dominating_multipartite(g, phi);
    const DegreeSequence star_ds = degree_sequence(star);
    check("partite.dominates", dominates(star_ds, ds));
    check("partite.omega_star_eq_phi", clique_number(star).size() == phi.r());
    check("partite.y_monotone_under_domination", solve_y(star_ds).y >= y.y - kExactFormula);
  }

  const VerifyOptions& opt_;
  Tally& tally_;
  std::string g6_;
};

}  // namespace

bool VerifyResult::ok() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const InvariantTally& t) { return t.failed == 0; });
}

const InvariantTally* VerifyResult::find(const std::string& name) const {
  auto it = std::find_if(invariants.begin(), invariants.end(), [&](const InvariantTally& t) { return t.name == name; });
  return it == invariants.end() ? nullptr : &*it;
}

VerifyResult verify_corpus(const CorpusSpec& corpus, const VerifyOptions& options) {
  Tally tally;
  GraphVerifier verifier(options, tally);
  VerifyResult result;
  for_each_graph(corpus, [&](const CorpusEntry& e) {
    verifier.run(e.graph);
    ++result.graphs;
  });
  result.invariants = tally.take();
  return result;
}

void write_verify(std::ostream& out, const VerifyResult& result) {
  fmt::print(out, "{:<40} {:>9} {:>9} {:>9}  {}\n", "invariant", "passed", "failed", "skipped", "first counterexample");
  for (const InvariantTally& t : result.invariants) {
    fmt::print(out, "{:<40} {:>9} {:>9} {:>9}  {}\n", t.name, t.passed, t.failed, t.skipped, t.first_counterexample);
  }
  fmt::print(out, "\n{} graphs, {}\n", result.graphs, result.ok() ? "all invariants hold" : "FAILURES");
}

PhiMuScan scan_phi_mu(const CorpusSpec& corpus, int max_exact_n, double tol, std::size_t max_witnesses) {
  PhiMuScan scan;
  for_each_graph(corpus, [&](const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.order() > max_exact_n) {
      ++scan.skipped;
      return;
    }
    ++scan.scanned;
    const int phi = phi_number(g, max_exact_n).r();
    const double n = g.order();
    const double ratio = n / (n - mu(g, tol).value);
    if (ratio > phi + 1e-9 && scan.witnesses.size() < max_witnesses) {
      scan.witnesses.push_back({e.id, ratio, phi});
    }
  });
  return scan;
}

}  // namespace qbound
