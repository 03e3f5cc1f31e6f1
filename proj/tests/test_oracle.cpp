#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "test_graphs.hpp"
#include "treecount/oracle.hpp"
#include "treecount/spanning.hpp"

using namespace treecount;
using namespace treecount::testing;

namespace {

// Counts (N-1)-edge subsets that form spanning trees, without the backtracking search.
mpz_class subset_count(const BipartiteGraph& g) {
  const int e = g.edge_count();
  const int need = g.vertex_count() - 1;
  mpz_class count = 0;
  for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
    if (std::popcount(mask) != need) continue;
    TreeEdgeSet t;
    for (int k = 0; k < e; ++k) {
      if ((mask >> k) & 1U) t.edge_indices.push_back(k);
    }
    count += is_spanning_tree(g, t);
  }
  return count;
}

}  // namespace

TEST_CASE("enumerate_trees") {
  CHECK(enumerate_trees(complete_bipartite(1, 1)).size() == 1);

  const auto trees = enumerate_trees(complete_bipartite(2, 2));
  REQUIRE(trees.size() == 4);
  std::set<int> omitted;
  for (const auto& t : trees) {
    CHECK(t.edge_indices.size() == 3);
    for (int e = 0; e < 4; ++e) {
      if (std::find(t.edge_indices.begin(), t.edge_indices.end(), e) == t.edge_indices.end()) omitted.insert(e);
    }
  }
  CHECK(omitted.size() == 4);

  CHECK(enumerate_trees(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 1}})).empty());
}

TEST_CASE("trees are valid, distinct and lexicographically ordered") {
  for (const auto& g : small_connected_corpus(6)) {
    const auto trees = enumerate_trees(g);
    for (std::size_t k = 0; k < trees.size(); ++k) {
      CHECK(is_spanning_tree(g, trees[k]));
      if (k > 0) CHECK(trees[k - 1].edge_indices < trees[k].edge_indices);
    }
  }
}

TEST_CASE("brute_tau") {
  CHECK(brute_tau(complete_bipartite(2, 3)) == 12);
  CHECK(brute_tau(cycle_graph(3)) == 6);
  CHECK(brute_tau(figure1_graph()) == 1152);
}

TEST_CASE("brute_tau agrees with subset enumeration and with tau") {
  for (const auto& g : small_connected_corpus(8)) {
    const mpz_class b = brute_tau(g);
    CHECK(b == subset_count(g));
    CHECK(b == tau(g));
  }
  for (const auto& g : random_connected_corpus(60, 9, 1234)) {
    if (g.edge_count() > 18) continue;
    CHECK(brute_tau(g) == subset_count(g));
  }
}

TEST_CASE("degree_histogram") {
  const BipartiteGraph c6 = cycle_graph(3);
  for (int idx = 0; idx < 3; ++idx) {
    const auto h = degree_histogram(c6, VertexRef{Side::Second, idx});
    CHECK(h == DegreeHistogram{{1, 2}, {2, 4}});
  }
  CHECK(degree_histogram(complete_bipartite(2, 2), VertexRef{Side::Second, 0}) == DegreeHistogram{{1, 2}, {2, 2}});
  CHECK(degree_histogram(complete_bipartite(1, 4), VertexRef{Side::First, 0}) == DegreeHistogram{{4, 1}});

  for (const auto& g : small_connected_corpus(6)) {
    const auto all = all_degree_histograms(g);
    const mpz_class total = brute_tau(g);
    for (int pos = 0; pos < g.vertex_count(); ++pos) {
      const VertexRef v = pos < g.n() ? VertexRef{Side::First, pos} : VertexRef{Side::Second, pos - g.n()};
      const auto h = degree_histogram(g, v);
      CHECK(h == all[pos]);
      mpz_class sum = 0;
      for (const auto& [d, c] : h) sum += c;
      CHECK(sum == total);
    }
  }
}

TEST_CASE("edge cap") {
  const BipartiteGraph big = complete_bipartite(5, 7);  // 35 edges
  try {
    brute_tau(big);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(degree_histogram(big, VertexRef{Side::First, 0}), Error);
  CHECK(brute_tau(complete_bipartite(2, 3), 6) == 12);
  CHECK_THROWS_AS(brute_tau(complete_bipartite(2, 3), 5), Error);
}
