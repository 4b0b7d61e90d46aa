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
#include <fmt/ranges.h>

#include <json.hpp>

#include "qbound/graph6.hpp"
#include "qbound/harness.hpp"

namespace qbound {

namespace {

BoundEntry entry(std::string name, double value, Side side, Target target, bool strict = false) {
  return make_entry(std::move(name), value, side, target, strict);
}

}  // namespace

GraphReport build_report(const Graph& g, std::string id, const ReportOptions& options) {
  GraphReport r;
  r.graph_id = std::move(id);
  r.graph6 = write_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.bounds.graph_id = r.graph_id;

  const DegreeSequence ds = degree_sequence(g);
  r.mu = mu(g, options.tol);
  r.q = q_index(g, options.tol);
  r.y = solve_y(ds);
  r.phi = phi_min(ds);

  auto& b = r.bounds;
  const double n = r.n;
  b.entries.push_back(entry("y", r.y.y, Side::kInfo, Target::kNone));
  b.entries.push_back(entry("y_minus_1", r.y.y - 1.0, Side::kUpper, Target::kMu));
  b.entries.push_back(entry("phi_1", phi_k(ds, 1), Side::kUpper, Target::kMu));
  if (r.n >= 2) b.entries.push_back(entry("two_degree", two_degree_mu_bound(ds), Side::kUpper, Target::kMu));
  b.entries.push_back(entry("phi_n", phi_k(ds, r.n), Side::kUpper, Target::kMu));
  b.entries.push_back(entry("phi_min", r.phi.value, Side::kUpper, Target::kMu));
  b.entries.push_back(entry("phi_min_ell", r.phi.ell, Side::kInfo, Target::kNone));

  if (r.m >= 1) {
    const LineDegreeSequence lds = line_degree_sequence(g);
    r.z = solve_z(lds);
    r.psi = psi_min(lds);
    r.nu = irregularity(ds).nu;
    b.entries.push_back(entry("z", r.z->y, Side::kInfo, Target::kNone));
    b.entries.push_back(entry("psi_1", psi_k(lds, 1), Side::kUpper, Target::kQ));
    if (r.m >= 2) b.entries.push_back(entry("psi_2", psi_k(lds, 2), Side::kUpper, Target::kQ));
    b.entries.push_back(entry("psi_min", r.psi->value, Side::kUpper, Target::kQ));
    b.entries.push_back(entry("psi_min_ell", r.psi->ell, Side::kInfo, Target::kNone));
    b.entries.push_back(entry("nikiforov_q", nikiforov_q_bound(ds), Side::kUpper, Target::kQ));
    b.entries.push_back(entry("z_plus_1", r.z->y + 1.0, Side::kUpper, Target::kQ));
    b.entries.push_back(entry("nu", r.nu, Side::kInfo, Target::kNone));
    b.add(q_lower_bounds(g, r.mu));
    b.add(clique_lower_bounds(g, r.y, r.mu));
  }
  const double third = 1.0 / 3.0;
  b.entries.push_back(entry("khadzhiivanov_nenov", average_degree_ratio(ds), Side::kLower, Target::kPhi));
  b.entries.push_back(entry("y_phi", n / (n - r.y.y + 1.0) - third, Side::kLower, Target::kPhi, true));
  if (n - r.mu.value > kDenominatorGuard) {
    b.entries.push_back(entry("wilf_phi", n / (n - r.mu.value) - third, Side::kLower, Target::kPhi, true));
  }

  annotate(b, Target::kMu, r.mu.value, options.exact_tol);
  annotate(b, Target::kQ, r.q.value, options.exact_tol);
  if (r.n <= kCliqueSearchLimit) {
    r.omega = clique_number(g);
    annotate(b, Target::kOmega, r.omega->size(), options.exact_tol);
  }
  if (r.n <= options.max_exact_n) {
    r.phi_partition = phi_number(g, options.max_exact_n);
    annotate(b, Target::kPhi, r.phi_partition->r(), options.exact_tol);
  }
  if (r.omega && r.phi_partition) {
    r.partite = partite_inequalities(g, r.y, r.mu, *r.omega, *r.phi_partition);
  }
  return r;
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw Error("unknown format '" + text + "' (expected text, csv or json)");
}

namespace {

void write_text(std::ostream& out, const GraphReport& r) {
  fmt::print(out, "graph {}  n={} m={}  graph6={}\n", r.graph_id, r.n, r.m, r.graph6);
  fmt::print(out, "  mu = {:.10f}  (residual {:.2e}, {} iterations)\n", r.mu.value, r.mu.residual, r.mu.iterations);
  fmt::print(out, "  q  = {:.10f}  (residual {:.2e}, {} iterations)\n", r.q.value, r.q.residual, r.q.iterations);
  fmt::print(out, "  y  = {:.10f}  (a = {}, c = {}, residual {:.2e})\n", r.y.y, r.y.a, r.y.c, r.y.residual);
  if (r.z) fmt::print(out, "  z  = {:.10f}  (a = {}, c = {}, residual {:.2e})\n", r.z->y, r.z->a, r.z->c, r.z->residual);
  fmt::print(out, "  {:<24} {:<6} {:<6} {:>16}  {}\n", "bound", "side", "target", "value", "flags");
  for (const BoundEntry& e : r.bounds.entries) {
    std::string flags;
    if (e.exact) flags += "exact ";
    if (e.strict) flags += "strict ";
    if (!e.sound) flags += "UNSOUND ";
    fmt::print(out, "  {:<24} {:<6} {:<6} {:>16.10f}  {}\n", e.name, to_string(e.side), to_string(e.target), e.value,
               flags);
  }
  if (r.omega) {
    fmt::print(out, "  omega = {}  clique {{{}}}\n", r.omega->size(), fmt::join(r.omega->vertices, ","));
  } else {
    fmt::print(out, "  omega: skipped (n > {})\n", kCliqueSearchLimit);
  }
  if (r.phi_partition) {
    fmt::print(out, "  phi = {}  parts", r.phi_partition->r());
    for (const auto& part : r.phi_partition->parts) fmt::print(out, " {{{}}}", fmt::join(part, ","));
    fmt::print(out, "\n");
  } else {
    fmt::print(out, "  phi: skipped (n above exact-search limit)\n");
  }
  for (const PartiteCheck& c : r.partite) {
    fmt::print(out, "  check {:<24} {}  ({:.10f} vs {:.10f})\n", c.name, c.holds ? "pass" : "FAIL", c.lhs, c.rhs);
  }
}

void write_csv(std::ostream& out, const std::vector<GraphReport>& reports) {
  fmt::print(out, "graph_id,n,m,name,side,target,value,target_value,exact,sound\n");
  for (const GraphReport& r : reports) {
    auto measured = [&](std::string_view name, double value) {
      fmt::print(out, "{},{},{},{},measured,,{},,,\n", r.graph_id, r.n, r.m, name, value);
    };
    measured("mu", r.mu.value);
    measured("q", r.q.value);
    if (r.omega) measured("omega", r.omega->size());
    if (r.phi_partition) measured("phi", r.phi_partition->r());
    for (const BoundEntry& e : r.bounds.entries) {
      fmt::print(out, "{},{},{},{},{},{},{},{},{},{}\n", r.graph_id, r.n, r.m, e.name, to_string(e.side),
                 to_string(e.target), e.value, e.target_value ? fmt::format("{}", *e.target_value) : "",
                 e.exact ? 1 : 0, e.sound ? 1 : 0);
    }
  }
}

nlohmann::json to_json(const GraphReport& r) {
  using nlohmann::json;
  auto spectral = [](const SpectralValue& s) {
    return json{{"value", s.value}, {"residual", s.residual}, {"iterations", s.iterations}};
  };
  auto ysol = [](const YSolution& y) { return json{{"y", y.y}, {"a", y.a}, {"c", y.c}, {"residual", y.residual}}; };
  auto fmin = [](const FamilyMin& f) {
    return json{{"ell", f.ell}, {"value", f.value}, {"scan_k", f.scan_k}, {"scan_value", f.scan_value}};
  };
  json j{{"graph_id", r.graph_id}, {"graph6", r.graph6}, {"n", r.n},       {"m", r.m},
         {"mu", spectral(r.mu)},   {"q", spectral(r.q)},  {"y", ysol(r.y)}, {"phi_min", fmin(r.phi)}};
  j["z"] = r.z ? ysol(*r.z) : json(nullptr);
  j["psi_min"] = r.psi ? fmin(*r.psi) : json(nullptr);
  j["entries"] = json::array();
  for (const BoundEntry& e : r.bounds.entries) {
    j["entries"].push_back({{"name", e.name},
                            {"value", e.value},
                            {"side", to_string(e.side)},
                            {"target", to_string(e.target)},
                            {"strict", e.strict},
                            {"target_value", e.target_value ? json(*e.target_value) : json(nullptr)},
                            {"exact", e.exact},
                            {"sound", e.sound}});
  }
  j["omega"] = r.omega ? json{{"size", r.omega->size()}, {"vertices", r.omega->vertices}} : json("skipped");
  j["phi"] = r.phi_partition ? json{{"r", r.phi_partition->r()}, {"parts", r.phi_partition->parts}} : json("skipped");
  j["partite_checks"] = json::array();
  for (const PartiteCheck& c : r.partite) {
    j["partite_checks"].push_back(
        {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"strict", c.strict}, {"holds", c.holds}});
  }
  return j;
}

}  // namespace

void write_reports(std::ostream& out, const std::vector<GraphReport>& reports, Format format) {
  switch (format) {
    case Format::kText:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out << '\n';
        write_text(out, reports[i]);
      }
      break;
    case Format::kCsv:
      write_csv(out, reports);
      break;
    case Format::kJson: {
      nlohmann::json doc{{"version", "1"}, {"graphs", nlohmann::json::array()}};
      for (const GraphReport& r : reports) doc["graphs"].push_back(to_json(r));
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace qbound
