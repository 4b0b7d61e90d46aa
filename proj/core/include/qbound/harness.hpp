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
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbound/bounds.hpp"
#include "qbound/generators.hpp"
#include "qbound/graph.hpp"
#include "qbound/partite.hpp"
#include "qbound/spectral.hpp"
#include "qbound/ysolver.hpp"

namespace qbound {

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

struct CorpusEntry {
  std::string id;
  Graph graph;
};

struct CorpusSpec {
  enum class Kind { kGraph6File, kExhaustive, kRandom, kNamed };

  Kind kind = Kind::kNamed;
  std::string path;                // kGraph6File; "-" reads stdin
  int n = 0;                       // kExhaustive, kRandom
  bool connected_only = false;     // kExhaustive
  double edge_probability = 0.5;   // kRandom
  int count = 0;                   // kRandom
  std::uint64_t seed = 0;          // kRandom
  std::vector<FamilySpec> named;   // kNamed
  bool irregular_only = false;     // keep only graphs with max degree != min degree

  static CorpusSpec graph6_file(std::string path);
  static CorpusSpec exhaustive(int n, bool connected_only);
  static CorpusSpec random(int n, double p, int count, std::uint64_t seed);
  static CorpusSpec named_list(std::vector<FamilySpec> families);
};

/// Streams the corpus in its deterministic order.
void for_each_graph(const CorpusSpec& spec, const std::function<void(const CorpusEntry&)>& visit);
std::vector<CorpusEntry> load_corpus(const CorpusSpec& spec);

/// Random corpus: `count` graphs drawn from one SplitMix64 stream seeded with `seed`.
std::vector<Graph> random_graphs(int n, double p, int count, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Per-graph reports
// ---------------------------------------------------------------------------

struct ReportOptions {
  double tol = kDefaultTolerance;  // eigensolver residual
  double exact_tol = 1e-7;         // exactness flags
  int max_exact_n = kPhiSearchLimit;
};

struct GraphReport {
  std::string graph_id;
  std::string graph6;
  int n = 0;
  int m = 0;
  SpectralValue mu;
  SpectralValue q;
  YSolution y;
  std::optional<YSolution> z;
  FamilyMin phi;
  std::optional<FamilyMin> psi;
  double nu = 1.0;
  BoundReport bounds;
  std::optional<CliqueCertificate> omega;  // empty when skipped
  std::optional<PartitionCertificate> phi_partition;
  std::vector<PartiteCheck> partite;
};

GraphReport build_report(const Graph& g, std::string id, const ReportOptions& options = {});

enum class Format { kText, kCsv, kJson };
Format parse_format(const std::string& text);

void write_reports(std::ostream& out, const std::vector<GraphReport>& reports, Format format);

// ---------------------------------------------------------------------------
// Comparison table
// ---------------------------------------------------------------------------

struct ComparisonRow {
  std::string graph_id;
  int n = 0;
  int m = 0;
  double q = 0.0;
  double thm1 = 0.0;
  double psi1 = 0.0;
  std::optional<double> psi2;  // needs m >= 2
  double psi_min = 0.0;
  int ell = 1;
  double z_plus_1 = 0.0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  ComparisonRow means;  // graph_id "mean"
  /// Graphs where one side is strictly smaller by more than 1e-9.
  int thm1_better = 0;
  int psi_min_better = 0;
  std::string first_thm1_better;
  std::string first_psi_min_better;
};

ComparisonRow comparison_row(const Graph& g, std::string id, double tol = kDefaultTolerance);
ComparisonTable comparison_table(const CorpusSpec& corpus, double tol = kDefaultTolerance);

/// CSV columns: graph_id,n,m,q,thm1,psi1,psi2,psi_min,ell,z_plus_1 with a
/// final "mean" row rounded to 4 decimals.
void write_table_csv(std::ostream& out, const ComparisonTable& table);
void write_table_text(std::ostream& out, const ComparisonTable& table);

// ---------------------------------------------------------------------------
// Invariant verification
// ---------------------------------------------------------------------------

struct VerifyOptions {
  double tol = kDefaultTolerance;
  double check_tol = 1e-7;
  double strict_slack = 1e-9;
  int max_exact_n = kPhiSearchLimit;
  /// Added to the named bound before checking; a harness self-test hook.
  /// Keys: phi_k, psi_k, nikiforov_q, z_plus_1, y, two_mu, irregularity_q.
  std::map<std::string, double> fault;
};

struct InvariantTally {
  std::string name;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::string first_counterexample;  // graph6 of the first failing graph
};

struct VerifyResult {
  std::vector<InvariantTally> invariants;
  long graphs = 0;
  bool ok() const;
  const InvariantTally* find(const std::string& name) const;
};

VerifyResult verify_corpus(const CorpusSpec& corpus, const VerifyOptions& options = {});
void write_verify(std::ostream& out, const VerifyResult& result);

// ---------------------------------------------------------------------------
// Exploratory scan for n/(n - mu) > phi
// ---------------------------------------------------------------------------

struct PhiMuWitness {
  std::string graph_id;
  double mu_ratio = 0.0;
  int phi = 0;
};

struct PhiMuScan {
  long scanned = 0;
  long skipped = 0;
  std::vector<PhiMuWitness> witnesses;
};

PhiMuScan scan_phi_mu(const CorpusSpec& corpus, int max_exact_n = kPhiSearchLimit, double tol = kDefaultTolerance,
                      std::size_t max_witnesses = 10);

}  // namespace qbound
