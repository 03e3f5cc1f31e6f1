#include "treecount/generate.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace treecount {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::RandomConnected: return "random-connected";
    case Family::RandomRightRegular: return "random-right-regular";
    case Family::RandomBiregular: return "random-biregular";
  }
  return "complete";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Complete, Family::RandomConnected, Family::RandomRightRegular,
                   Family::RandomBiregular}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::InfeasibleSpec, "unknown family \"" + std::string(name) + "\"");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

template <class Attempt>
BipartiteGraph retry_until_connected(Attempt&& attempt) {
  for (int k = 0; k < kMaxConnectivityAttempts; ++k) {
    std::optional<BipartiteGraph> g = attempt();
    if (g && is_connected(*g)) return *g;
  }
  throw Error(ErrorCode::ConnectivityRetriesExhausted,
              "no connected simple graph after " + std::to_string(kMaxConnectivityAttempts) +
                  " attempts");
}

void require(bool ok, const std::string& why) {
  if (!ok) throw Error(ErrorCode::InfeasibleSpec, why);
}

}  // namespace

BipartiteGraph generate(const GeneratorSpec& spec) {
  require(spec.n >= 1 && spec.m >= 1, "sizes must be positive");
  require(spec.n + spec.m <= kMaxVertices, "n + m exceeds the vertex cap");
  const int n = spec.n;
  const int m = spec.m;
  Rng rng(spec.seed);

  switch (spec.family) {
    case Family::Complete:
      return complete_bipartite(n, m);

    case Family::RandomConnected: {
      require(spec.p > 0.0 && spec.p <= 1.0, "edge probability must be in (0, 1]");
      return retry_until_connected([&]() -> std::optional<BipartiteGraph> {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < m; ++j) {
            if (rng.unit() < spec.p) edges.emplace_back(i, j);
          }
        }
        return BipartiteGraph(n, m, edges);
      });
    }

    case Family::RandomRightRegular: {
      require(spec.b.has_value(), "random-right-regular needs b");
      const int b = *spec.b;
      require(b >= 1 && b <= n, "right degree b must be in [1, n]");
      return retry_until_connected([&]() -> std::optional<BipartiteGraph> {
        std::vector<Edge> edges;
        std::vector<int> pool(n);
        for (int j = 0; j < m; ++j) {
          std::iota(pool.begin(), pool.end(), 0);
          // Partial Fisher-Yates: first b slots become a uniform b-subset.
          for (int k = 0; k < b; ++k) {
            const int pick = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - k)));
            std::swap(pool[k], pool[pick]);
            edges.emplace_back(pool[k], j);
          }
        }
        return BipartiteGraph(n, m, edges);
      });
    }

    case Family::RandomBiregular: {
      require(spec.a.has_value() && spec.b.has_value(), "random-biregular needs a and b");
      const int a = *spec.a;
      const int b = *spec.b;
      require(a >= 1 && a <= m, "left degree a must be in [1, m]");
      require(b >= 1 && b <= n, "right degree b must be in [1, n]");
      require(a * n == b * m, "biregular degrees need a*n == b*m");
      // Configuration pairing of stubs; multi-edges reject the whole attempt.
      // Dense degrees almost never pair without a multi-edge, so above half
      // density the (m - a, n - b) complement is paired and then inverted.
      const bool dense = 2 * a > m;
      const int pair_a = dense ? m - a : a;
      const int pair_b = dense ? n - b : b;
      std::vector<int> right_stubs;
      for (int j = 0; j < m; ++j) right_stubs.insert(right_stubs.end(), pair_b, j);
      return retry_until_connected([&]() -> std::optional<BipartiteGraph> {
        for (std::size_t k = right_stubs.size(); k > 1; --k) {
          std::swap(right_stubs[k - 1], right_stubs[rng.below(k)]);
        }
        std::vector<std::uint64_t> seen(n, 0);
        for (std::size_t s = 0; s < right_stubs.size(); ++s) {
          const int i = static_cast<int>(s) / pair_a;
          const int j = right_stubs[s];
          if ((seen[i] >> j) & 1U) return std::nullopt;
          seen[i] |= std::uint64_t{1} << j;
        }
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < m; ++j) {
            if ((((seen[i] >> j) & 1U) != 0) != dense) edges.emplace_back(i, j);
          }
        }
        return BipartiteGraph(n, m, edges);
      });
    }
  }
  throw Error(ErrorCode::InfeasibleSpec, "unknown family");
}

}  // namespace treecount
