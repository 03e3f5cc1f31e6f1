#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "treecount/bounds.hpp"
#include "treecount/generate.hpp"

namespace treecount {

inline constexpr int kMaxExhaustiveCells = 20;

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Workers share
/// only the index counter; the first exception is rethrown after joining.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Bipartite graph whose bit i*m + j of `pattern` marks edge (i, j).
BipartiteGraph graph_from_pattern(int n, int m, std::uint64_t pattern);

/// Reports for every connected graph among the 2^(n m) adjacency patterns,
/// ordered by pattern. No isomorphism reduction. Throws TooLarge when
/// n m > 20.
std::vector<BoundReport> search_exhaustive(int n, int m, int jobs = 1);

// Number of connected graphs among the 2^(n m) patterns.
std::size_t count_connected_patterns(int n, int m);

struct SweepResult {
  std::vector<BoundReport> reports;  // ordered by graph_id, then trial
};

/// `trials` graphs from `spec`, trial t seeded with derive_seed(spec.seed, t).
SweepResult sweep(const GeneratorSpec& spec, int trials, int jobs = 1);

struct FerrersCheck {
  Partition partition;
  mpz_class tau;
  mpq_class ehrenborg;
  bool equal = false;
};

FerrersCheck check_ferrers(const Partition& p);

// Every partition with n <= max_parts parts and largest part m <= max_largest.
std::vector<FerrersCheck> ferrers_sweep(int max_parts, int max_largest, int jobs = 1);

}  // namespace treecount
