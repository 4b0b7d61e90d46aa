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


#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qbound/graph6.hpp"
#include "qbound/harness.hpp"

using namespace qbound;

namespace {

CorpusSpec named(std::initializer_list<const char*> ids) {
  std::vector<FamilySpec> f;
  for (const char* id : ids) f.push_back(parse_family_spec(id));
  return CorpusSpec::named_list(std::move(f));
}

const BoundEntry& entry(const GraphReport& r, std::string_view name) {
  const BoundEntry* e = r.bounds.find(name);
  REQUIRE(e != nullptr);
  return *e;
}

std::string render(const std::vector<GraphReport>& reports, Format f) {
  std::ostringstream out;
  write_reports(out, reports, f);
  return out.str();
}

}  // namespace

TEST_CASE("reports on small named graphs") {
  const GraphReport w = build_report(gen::wheel(4), "wheel(4)");
  CHECK(std::abs(w.mu.value - 3.0) <= 1e-9);
  CHECK(entry(w, "y_minus_1").value == 3.0);
  CHECK(entry(w, "y_minus_1").exact);

  const GraphReport k = build_report(gen::complete_bipartite(3, 4), "k34");
  CHECK(std::abs(k.q.value - 7.0) <= 1e-9);
  CHECK(entry(k, "psi_1").value == 7.0);
  CHECK(entry(k, "psi_1").exact);
  CHECK(entry(k, "irregularity_q").exact);

  const GraphReport p = build_report(gen::path(3), "p3");
  CHECK(std::abs(entry(p, "two_degree").value - std::sqrt(2.0)) <= 1e-12);
  CHECK(entry(p, "two_degree").exact);
  REQUIRE(p.omega);
  REQUIRE(p.phi_partition);
  CHECK(p.phi_partition->r() == 2);
  for (const BoundEntry& e : p.bounds.entries) CHECK_MESSAGE(e.sound, e.name);
}

TEST_CASE("large graphs skip the exact searches") {
  ReportOptions opt;
  opt.max_exact_n = 8;
  const GraphReport r = build_report(gen::cycle(10), "c10", opt);
  CHECK(r.omega);
  CHECK_FALSE(r.phi_partition);
  CHECK(r.partite.empty());
  const auto j = nlohmann::json::parse(render({r}, Format::kJson));
  CHECK(j["version"] == "1");
  CHECK(j["graphs"][0]["phi"] == "skipped");
  CHECK(j["graphs"][0]["omega"]["size"] == 2);
}

TEST_CASE("edgeless graphs report without edge bounds") {
  const GraphReport r = build_report(gen::empty(3), "e3");
  CHECK_FALSE(r.z);
  CHECK(r.bounds.find("psi_1") == nullptr);
  CHECK(entry(r, "y").value == 1.0);
  CHECK(!render({r}, Format::kText).empty());
}

TEST_CASE("csv output is deterministic") {
  auto once = [] {
    std::vector<GraphReport> reports;
    for_each_graph(CorpusSpec::random(9, 0.4, 15, 77),
                   [&](const CorpusEntry& e) { reports.push_back(build_report(e.graph, e.id)); });
    return render(reports, Format::kCsv);
  };
  const std::string a = once();
  CHECK(a == once());
  CHECK(a.rfind("graph_id,n,m,name,side,target,value,target_value,exact,sound\n", 0) == 0);

  auto table = [] {
    std::ostringstream out;
    write_table_csv(out, comparison_table(CorpusSpec::random(10, 0.5, 20, 3)));
    return out.str();
  };
  CHECK(table() == table());
}

TEST_CASE("comparison table") {
  const ComparisonTable t = comparison_table(named({"star(10)", "wheel(10)", "bipartite(5,5)"}));
  REQUIRE(t.rows.size() == 3);
  for (const ComparisonRow& r : t.rows) {
    CHECK(r.thm1 >= r.q - 1e-7);
    CHECK(r.psi1 >= r.q - 1e-7);
    CHECK(*r.psi2 >= r.q - 1e-7);
    CHECK(r.psi_min >= r.q - 1e-7);
    CHECK(r.z_plus_1 >= r.q - 1e-7);
  }
  std::ostringstream out;
  write_table_csv(out, t);
  std::istringstream lines(out.str());
  std::string header, last, line;
  std::getline(lines, header);
  while (std::getline(lines, line)) last = line;
  CHECK(header == "graph_id,n,m,q,thm1,psi1,psi2,psi_min,ell,z_plus_1");
  CHECK(last.rfind("mean,,,", 0) == 0);

  CorpusSpec c = CorpusSpec::exhaustive(5, true);
  c.irregular_only = true;
  const ComparisonTable e = comparison_table(c);
  for (const ComparisonRow& r : e.rows) CHECK_FALSE(degree_sequence(parse_graph6(r.graph_id)).is_constant());
  CHECK(e.means.psi_min <= *e.means.psi2 + 1e-12);
  CHECK(*e.means.psi2 <= e.means.psi1 + 1e-12);
}

TEST_CASE("verification passes on clean corpora") {
  const VerifyResult r = verify_corpus(named({"star(7)", "wheel(9)", "bipartite(3,4)", "regular(10,3)", "k13plus",
                                              "cycle(6)", "doublestar(3,3)", "empty(4)"}));
  CHECK(r.ok());
  CHECK(r.graphs == 8);
  CHECK(r.find("bounds.complete_bipartite_exact")->passed >= 2);
  CHECK(r.find("bounds.regular_exact")->passed >= 2);
  CHECK(r.find("nosuch") == nullptr);
}

TEST_CASE("verification catches an injected fault") {
  for (const char* key : {"phi_k", "psi_k", "nikiforov_q", "z_plus_1", "y", "two_mu", "irregularity_q"}) {
    VerifyOptions opt;
    opt.fault[key] = std::string(key) == "two_mu" || std::string(key) == "irregularity_q" ? 0.5 : -0.5;
    const VerifyResult r = verify_corpus(named({"star(7)", "path(5)"}), opt);
    CHECK_MESSAGE(!r.ok(), key);
    bool has_counterexample = false;
    for (const InvariantTally& t : r.invariants)
      if (t.failed > 0) has_counterexample = has_counterexample || !t.first_counterexample.empty();
    CHECK(has_counterexample);
  }
}

TEST_CASE("verification skips the exact searches above the limit") {
  VerifyOptions opt;
  opt.max_exact_n = 5;
  const VerifyResult r = verify_corpus(named({"cycle(8)"}), opt);
  CHECK(r.ok());
  CHECK(r.find("partite.phi_le_omega")->skipped == 1);
}

TEST_CASE("phi scan finds graphs with n/(n - mu) above phi") {
  const PhiMuScan s = scan_phi_mu(CorpusSpec::exhaustive(5, false), kPhiSearchLimit, kDefaultTolerance, 3);
  CHECK(s.scanned == 1024);
  REQUIRE(s.witnesses.size() == 3);
  for (const PhiMuWitness& w : s.witnesses) {
    const Graph g = parse_graph6(w.graph_id);
    const double n = g.order();
    CHECK(w.phi == phi_number(g).r());
    CHECK(n / (n - mu(g).value) > w.phi);
    CHECK(w.mu_ratio < w.phi + 1.0 / 3);
  }
  CHECK(scan_phi_mu(named({"complete(5)", "cycle(6)"})).witnesses.empty());
}
