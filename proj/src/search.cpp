#include "treecount/search.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "treecount/spanning.hpp"

namespace treecount {

BipartiteGraph graph_from_pattern(int n, int m, std::uint64_t pattern) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if ((pattern >> (i * m + j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(n, m, edges);
}

namespace {

void check_exhaustive_size(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::EmptySide, "search sizes must be positive");
  if (n * m > kMaxExhaustiveCells) {
    throw Error(ErrorCode::TooLarge,
                "n*m = " + std::to_string(n * m) + " exceeds the exhaustive limit " + std::to_string(kMaxExhaustiveCells));
  }
}

}  // namespace

std::size_t count_connected_patterns(int n, int m) {
  check_exhaustive_size(n, m);
  std::size_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  for (std::uint64_t p = 0; p < total; ++p) count += is_connected(graph_from_pattern(n, m, p));
  return count;
}

std::vector<BoundReport> search_exhaustive(int n, int m, int jobs) {
  check_exhaustive_size(n, m);
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  std::vector<std::uint64_t> connected;
  for (std::uint64_t p = 0; p < total; ++p) {
    if (is_connected(graph_from_pattern(n, m, p))) connected.push_back(p);
  }
  std::vector<BoundReport> reports(connected.size());
  parallel_for(connected.size(), jobs,
               [&](std::size_t k) { reports[k] = conjecture_report(graph_from_pattern(n, m, connected[k])); });
  return reports;
}

SweepResult sweep(const GeneratorSpec& spec, int trials, int jobs) {
  if (trials < 0) throw Error(ErrorCode::InfeasibleSpec, "trials must be non-negative");
  std::vector<std::optional<BipartiteGraph>> graphs(trials);
  std::vector<BoundReport> reports(trials);
  parallel_for(static_cast<std::size_t>(trials), jobs, [&](std::size_t t) {
    GeneratorSpec trial = spec;
    trial.seed = derive_seed(spec.seed, t);
    graphs[t] = generate(trial);
    reports[t] = conjecture_report(*graphs[t]);
  });
  std::vector<std::size_t> order(trials);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return graphs[x]->adjacency_pattern() < graphs[y]->adjacency_pattern();
  });
  SweepResult out;
  out.reports.reserve(trials);
  for (std::size_t t : order) out.reports.push_back(std::move(reports[t]));
  return out;
}

FerrersCheck check_ferrers(const Partition& p) {
  const BipartiteGraph g = from_partition(p);
  FerrersCheck check{p, tau(g), ehrenborg_bound(g), false};
  check.equal = mpq_class(check.tau) == check.ehrenborg;
  return check;
}

std::vector<FerrersCheck> ferrers_sweep(int max_parts, int max_largest, int jobs) {
  std::vector<Partition> partitions;
  for (int n = 1; n <= max_parts; ++n) {
    for (int m = 1; m <= max_largest; ++m) {
      if (n + m > kMaxVertices) continue;
      auto batch = enumerate_partitions(n, m);
      partitions.insert(partitions.end(), batch.begin(), batch.end());
    }
  }
  std::vector<std::optional<FerrersCheck>> checks(partitions.size());
  parallel_for(partitions.size(), jobs, [&](std::size_t k) { checks[k] = check_ferrers(partitions[k]); });
  std::vector<FerrersCheck> out;
  out.reserve(checks.size());
  for (auto& c : checks) out.push_back(std::move(*c));
  return out;
}

}  // namespace treecount
