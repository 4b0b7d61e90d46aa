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


#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qbound/enumerate.hpp"
#include "qbound/graph6.hpp"
#include "qbound/harness.hpp"

namespace {

using namespace qbound;

struct CorpusFlags {
  std::string input;
  int exhaustive = -1;
  std::vector<double> random;  // n p count
  std::vector<std::string> named;
  std::uint64_t seed = 0;
  bool connected = false;
  bool irregular_only = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", input, "graph6 file, one graph per line ('-' for stdin)");
    cmd->add_option("--exhaustive", exhaustive, "all labeled graphs on N vertices (N <= 7)");
    cmd->add_option("--random", random, "N P COUNT: Erdos-Renyi corpus")->expected(3);
    cmd->add_option("--named", named, "family such as star(10) or bipartite(3,4); repeatable");
    cmd->add_option("--seed", seed, "seed for --random");
    cmd->add_flag("--connected", connected, "with --exhaustive, keep connected graphs only");
    cmd->add_flag("--irregular-only", irregular_only, "drop graphs with max degree == min degree");
  }

  CorpusSpec spec() const {
    const int sources = !input.empty() + (exhaustive >= 0) + !random.empty() + !named.empty();
    if (sources != 1) throw Error("give exactly one corpus: a graph6 file, --exhaustive, --random or --named");
    CorpusSpec s;
    if (!input.empty()) {
      s = CorpusSpec::graph6_file(input);
    } else if (exhaustive >= 0) {
      s = CorpusSpec::exhaustive(exhaustive, connected);
    } else if (!random.empty()) {
      s = CorpusSpec::random(count_arg(random[0], "N"), random[1], count_arg(random[2], "COUNT"), seed);
    } else {
      std::vector<FamilySpec> families;
      for (const std::string& text : named) families.push_back(parse_family_spec(text));
      s = CorpusSpec::named_list(std::move(families));
    }
    s.irregular_only = irregular_only;
    return s;
  }

  static int count_arg(double v, const char* what) {
    if (v < 0 || v != static_cast<int>(v)) throw Error(fmt::format("--random: {} must be a non-negative integer", what));
    return static_cast<int>(v);
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw Error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_gen(const std::string& family, const std::vector<std::string>& args, const std::string& out_path,
            std::uint64_t seed, bool connected) {
  auto number = [&](std::size_t i) -> double {
    if (i >= args.size()) throw Error("gen " + family + ": missing parameter " + std::to_string(i + 1));
    try {
      std::size_t used = 0;
      const double v = std::stod(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument(args[i]);
      return v;
    } catch (const std::exception&) {
      throw Error("gen " + family + ": bad parameter '" + args[i] + "'");
    }
  };
  auto integer = [&](std::size_t i) {
    const double v = number(i);
    if (v != static_cast<long>(v)) throw Error("gen " + family + ": parameter '" + args[i] + "' must be an integer");
    return static_cast<int>(v);
  };

  std::vector<Graph> graphs;
  if (family == "exhaustive") {
    if (args.size() != 1) throw Error("gen exhaustive N");
    for_each_labeled_graph(integer(0), connected, [&](const Graph& g) { graphs.push_back(g); });
  } else if (family == "random") {
    if (args.size() != 3) throw Error("gen random N P COUNT");
    graphs = random_graphs(integer(0), number(1), integer(2), seed);
  } else {
    FamilySpec spec;
    spec.name = family;
    spec.seed = seed;
    for (std::size_t i = 0; i < args.size(); ++i) spec.params.push_back(number(i));
    graphs.push_back(generate(spec));
  }
  Output out(out_path);
  write_graph6_stream(out.stream(), graphs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qbound: spectral, signless Laplacian and clique bounds from degree sequences"};
  app.require_subcommand(1);

  double tol = kDefaultTolerance;
  int max_exact_n = kPhiSearchLimit;
  std::string format_text = "text";
  std::string out_path;

  // gen
  auto* gen = app.add_subcommand("gen", "write graphs as graph6, one per line");
  std::string family;
  std::vector<std::string> gen_args;
  std::uint64_t gen_seed = 0;
  bool gen_connected = false;
  gen->add_option("family", family,
                  "empty, path, cycle, complete, star, wheel, bipartite, multipartite, k13plus, regular, "
                  "doublestar, random, exhaustive")
      ->required();
  gen->add_option("params", gen_args, "family parameters");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");
  gen->add_option("--seed", gen_seed, "seed for random families");
  gen->add_flag("--connected", gen_connected, "exhaustive: connected graphs only");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "per-graph bound report");
  CorpusFlags bounds_corpus;
  bounds_corpus.attach(bounds);
  bounds->add_option("--format", format_text, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  bounds->add_option("--tol", tol, "eigensolver residual tolerance");
  bounds->add_option("--max-exact-n", max_exact_n, "largest order for the exact phi search");
  bounds->add_option("-o,--output", out_path, "output file (default stdout)");

  // table
  auto* table = app.add_subcommand("table", "comparison of q against its upper bounds");
  CorpusFlags table_corpus;
  table_corpus.attach(table);
  std::string table_format = "csv";
  table->add_option("--format", table_format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  table->add_option("--tol", tol, "eigensolver residual tolerance");
  table->add_option("-o,--output", out_path, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check every invariant over a corpus");
  CorpusFlags verify_corpus_flags;
  verify_corpus_flags.attach(verify);
  std::vector<std::string> faults;
  verify->add_option("--tol", tol, "eigensolver residual tolerance");
  verify->add_option("--max-exact-n", max_exact_n, "largest order for the exact clique and phi searches");
  verify->add_option("--inject-fault", faults, "KEY=DELTA: shift a bound to test the harness itself");

  // scan-phi-mu
  auto* scan = app.add_subcommand("scan-phi-mu", "search for graphs with n/(n - mu) > phi");
  CorpusFlags scan_corpus;
  scan_corpus.attach(scan);
  std::size_t max_witnesses = 10;
  scan->add_option("--tol", tol, "eigensolver residual tolerance");
  scan->add_option("--max-exact-n", max_exact_n, "largest order for the exact phi search");
  scan->add_option("--max-witnesses", max_witnesses, "stop listing after this many witnesses");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return run_gen(family, gen_args, out_path, gen_seed, gen_connected);

    if (*bounds) {
      ReportOptions opt;
      opt.tol = tol;
      opt.max_exact_n = max_exact_n;
      std::vector<GraphReport> reports;
      for_each_graph(bounds_corpus.spec(),
                     [&](const CorpusEntry& e) { reports.push_back(build_report(e.graph, e.id, opt)); });
      Output out(out_path);
      write_reports(out.stream(), reports, parse_format(format_text));
      return 0;
    }

    if (*table) {
      const ComparisonTable t = comparison_table(table_corpus.spec(), tol);
      Output out(out_path);
      if (table_format == "csv") {
        write_table_csv(out.stream(), t);
      } else {
        write_table_text(out.stream(), t);
      }
      return 0;
    }

    if (*verify) {
      VerifyOptions opt;
      opt.tol = tol;
      opt.max_exact_n = max_exact_n;
      for (const std::string& f : faults) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw Error("--inject-fault expects KEY=DELTA, got '" + f + "'");
        try {
          opt.fault[f.substr(0, eq)] = std::stod(f.substr(eq + 1));
        } catch (const std::exception&) {
          throw Error("--inject-fault: bad delta in '" + f + "'");
        }
      }
      const VerifyResult result = verify_corpus(verify_corpus_flags.spec(), opt);
      write_verify(std::cout, result);
      return result.ok() ? 0 : 1;
    }

    if (*scan) {
      const PhiMuScan s = scan_phi_mu(scan_corpus.spec(), max_exact_n, tol, max_witnesses);
      fmt::print("scanned {} graphs, skipped {} above the exact-search limit\n", s.scanned, s.skipped);
      for (const PhiMuWitness& w : s.witnesses) {
        fmt::print("witness {}  n/(n-mu) = {:.10f}  phi = {}\n", w.graph_id, w.mu_ratio, w.phi);
      }
      if (s.witnesses.empty()) fmt::print("no graph with n/(n-mu) > phi\n");
      return 0;
    }
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "qbound: error: {}\n", e.what());
    return 2;
  }
  return 0;
}
