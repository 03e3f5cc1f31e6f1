#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "treecount/bounds.hpp"
#include "treecount/generate.hpp"
#include "treecount/oracle.hpp"
#include "treecount/report.hpp"
#include "treecount/search.hpp"
#include "treecount/spanning.hpp"

namespace treecount::cli {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string report_path;
  std::string format;
  int jobs = 1;
};

void add_output_options(CLI::App* cmd, OutputOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--report", o.report_path, "write the report to this file instead of stdout");
  cmd->add_option("--format", o.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

BipartiteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open graph file " + path);
  return read_graph(in);
}

// Writes through `out` when no report path is set.
template <class Writer>
void emit(const OutputOptions& o, std::ostream& out, Writer&& write) {
  if (o.report_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.report_path, std::ios::binary);
  if (!file) throw IoFailure("cannot write report " + o.report_path);
  write(file);
  file.flush();
  if (!file) throw IoFailure("failed writing report " + o.report_path);
}

int oracle_edge_cap() {
  if (const char* env = std::getenv("TREECOUNT_MAX_EDGES")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "TREECOUNT_MAX_EDGES must be an integer");
    }
  }
  return kDefaultOracleEdgeCap;
}

int summarize(const std::vector<BoundReport>& reports, std::ostream& out) {
  std::size_t violating = 0;
  std::size_t candidates = 0;
  for (const auto& r : reports) {
    violating += !r.violations.empty();
    candidates += r.counterexample_candidate;
  }
  out << "examined " << reports.size() << " connected graphs, " << violating << " with violations, "
      << candidates << " counterexample candidates\n";
  return candidates > 0 ? kCounterexample : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spanning-tree counts and upper bounds for bipartite graphs", "treecount"};
  app.require_subcommand(1);

  std::string graph_path;
  bool verify = false;
  auto* tau_cmd = app.add_subcommand("tau", "count spanning trees of a graph file");
  tau_cmd->add_option("--graph", graph_path, "graph file")->required();
  tau_cmd->add_flag("--verify", verify, "cross-check with explicit enumeration");

  std::string vertex_text;
  auto* poly_cmd = app.add_subcommand("poly", "degree generating polynomial at a vertex");
  poly_cmd->add_option("--graph", graph_path, "graph file")->required();
  poly_cmd->add_option("--vertex", vertex_text, "side:index, e.g. second:0")->required();

  OutputOptions bounds_out;
  auto* bounds_cmd = app.add_subcommand("bounds", "tau and every upper bound for a graph file");
  bounds_cmd->add_option("--graph", graph_path, "graph file")->required();
  add_output_options(bounds_cmd, bounds_out, "text");

  std::string partition_text;
  bool check_equality = false;
  std::vector<int> all_up_to;
  OutputOptions ferrers_out;
  auto* ferrers_cmd = app.add_subcommand("ferrers", "Ferrers graphs from partitions");
  auto* partition_opt = ferrers_cmd->add_option("--partition", partition_text, "decreasing parts, e.g. 4,4,3,3,1");
  ferrers_cmd->add_flag("--check-equality", check_equality, "compare tau with D/(mn)");
  auto* all_opt = ferrers_cmd->add_option("--all-up-to", all_up_to, "check every partition with <= N parts, largest <= M")
                      ->expected(2);
  partition_opt->excludes(all_opt);
  add_output_options(ferrers_cmd, ferrers_out, "csv");

  int n = 0, m = 0;
  OutputOptions search_out;
  auto* search_cmd = app.add_subcommand("search", "exhaustive search over all bipartite adjacency patterns");
  search_cmd->add_option("--n", n, "first class size")->required();
  search_cmd->add_option("--m", m, "second class size")->required();
  add_output_options(search_cmd, search_out, "csv");

  std::string family_name;
  std::optional<int> deg_a, deg_b;
  double p = 0.5;
  int trials = 1;
  std::uint64_t seed = 0;
  OutputOptions sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "randomized sweep over a graph family");
  sweep_cmd->add_option("--family", family_name, "complete, random-connected, random-right-regular, random-biregular")
      ->required();
  sweep_cmd->add_option("--n", n, "first class size")->required();
  sweep_cmd->add_option("--m", m, "second class size")->required();
  sweep_cmd->add_option("--a", deg_a, "first-class degree");
  sweep_cmd->add_option("--b", deg_b, "second-class degree");
  sweep_cmd->add_option("--p", p, "edge probability")->capture_default_str();
  sweep_cmd->add_option("--trials", trials, "number of graphs")->required();
  sweep_cmd->add_option("--seed", seed, "64-bit seed")->required();
  add_output_options(sweep_cmd, sweep_out, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "treecount: " << e.what() << '\n';
    return kBadConfig;
  }

  try {
    if (*tau_cmd) {
      const BipartiteGraph g = load_graph(graph_path);
      const mpz_class t = tau(g);
      out << "tau = " << t.get_str() << '\n';
      if (verify) {
        const mpz_class brute = brute_tau(g, oracle_edge_cap());
        out << "brute_tau = " << brute.get_str() << ", match = " << (brute == t ? "true" : "false") << '\n';
        if (brute != t) return kCheckFailed;
      }
      return kOk;
    }

    if (*poly_cmd) {
      const BipartiteGraph g = load_graph(graph_path);
      const VertexRef v = parse_vertex(vertex_text);
      const IntPolynomial poly = degree_polynomial(g, v);
      out << "P(y) = " << poly.to_string() << '\n';
      out << "P(1) = " << poly(mpz_class(1)).get_str() << '\n';
      return kOk;
    }

    if (*bounds_cmd) {
      const BipartiteGraph g = load_graph(graph_path);
      const BoundReport report = conjecture_report(g);
      emit(bounds_out, out, [&](std::ostream& s) { write_reports(s, std::span(&report, 1), parse_format(bounds_out.format)); });
      return report.counterexample_candidate ? kCounterexample : kOk;
    }

    if (*ferrers_cmd) {
      if (!partition_text.empty()) {
        const FerrersCheck check = check_ferrers(parse_partition(partition_text));
        out << "tau = " << check.tau.get_str();
        if (check_equality) {
          out << ", D/(mn) = " << check.ehrenborg.get_str() << ", equal = " << (check.equal ? "true" : "false");
        }
        out << '\n';
        return check_equality && !check.equal ? kCheckFailed : kOk;
      }
      if (all_up_to.size() != 2) {
        err << "treecount: ferrers needs --partition or --all-up-to N M\n";
        return kBadConfig;
      }
      const auto checks = ferrers_sweep(all_up_to[0], all_up_to[1], ferrers_out.jobs);
      const auto unequal = std::count_if(checks.begin(), checks.end(), [](const FerrersCheck& c) { return !c.equal; });
      if (!ferrers_out.report_path.empty()) {
        emit(ferrers_out, out, [&](std::ostream& s) {
          s << "partition,n,m,tau,ehrenborg,equal\n";
          for (const auto& c : checks) {
            s << '"' << c.partition.to_string() << "\"," << c.partition.size() << ',' << c.partition.largest() << ','
              << c.tau.get_str() << ',' << c.ehrenborg.get_str() << ',' << (c.equal ? "true" : "false") << '\n';
          }
        });
      }
      out << "checked " << checks.size() << " partitions, " << unequal << " with tau != D/(mn)\n";
      return unequal ? kCheckFailed : kOk;
    }

    if (*search_cmd) {
      const auto reports = search_exhaustive(n, m, search_out.jobs);
      emit(search_out, out, [&](std::ostream& s) { write_reports(s, reports, parse_format(search_out.format)); });
      return summarize(reports, search_out.report_path.empty() ? err : out);
    }

    if (*sweep_cmd) {
      GeneratorSpec spec;
      spec.family = parse_family(family_name);
      spec.n = n;
      spec.m = m;
      spec.p = p;
      spec.a = deg_a;
      spec.b = deg_b;
      spec.seed = seed;
      const SweepResult result = sweep(spec, trials, sweep_out.jobs);
      emit(sweep_out, out, [&](std::ostream& s) { write_reports(s, result.reports, parse_format(sweep_out.format)); });
      return summarize(result.reports, sweep_out.report_path.empty() ? err : out);
    }
  } catch (const IoFailure& e) {
    err << "treecount: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "treecount: " << e.what() << '\n';
    return kBadConfig;
  }
  return kBadConfig;
}

}  // namespace treecount::cli
