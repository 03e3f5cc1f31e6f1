#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "test_graphs.hpp"
#include "treecount/graph.hpp"
#include "treecount/spanning.hpp"

using namespace treecount;
using namespace treecount::testing;

TEST_CASE("build_graph") {
  const std::vector<Edge> k22{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const BipartiteGraph g = build_graph(2, 2, k22);
  CHECK(g.edge_count() == 4);
  CHECK(g.left_degrees() == std::vector<int>{2, 2});
  CHECK(g.right_degrees() == std::vector<int>{2, 2});

  const BipartiteGraph star = star_graph(3);
  CHECK(star.left_degrees() == std::vector<int>{3});
  CHECK(star.right_degrees() == std::vector<int>{1, 1, 1});

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
  };
  const std::vector<Edge> dup{{0, 0}, {0, 0}};
  CHECK(code_of([&] { build_graph(2, 2, dup); }) == ErrorCode::DuplicateEdge);
  const std::vector<Edge> out_of_range{{0, 2}};
  CHECK(code_of([&] { build_graph(2, 2, out_of_range); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { build_graph(0, 2, {}); }) == ErrorCode::EmptySide);
  CHECK(code_of([&] { build_graph(40, 30, {}); }) == ErrorCode::TooLarge);
}

TEST_CASE("from_partition") {
  const BipartiteGraph fig = figure1_graph();
  CHECK(fig.n() == 5);
  CHECK(fig.m() == 4);
  CHECK(fig.edge_count() == 15);
  CHECK(fig.left_degrees() == std::vector<int>{4, 4, 3, 3, 1});
  CHECK(fig.right_degrees() == std::vector<int>{5, 4, 4, 2});

  CHECK(from_partition(Partition({3, 3})) == complete_bipartite(2, 3));

  const BipartiteGraph path = from_partition(Partition({2, 1}));
  CHECK(path.edges() == std::vector<Edge>{{0, 0}, {0, 1}, {1, 0}});

  CHECK_THROWS_AS(Partition({}), Error);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
}

TEST_CASE("parse_partition") {
  CHECK(parse_partition("4,4,3,3,1") == Partition({4, 4, 3, 3, 1}));
  CHECK(parse_partition(" 2, 1 ") == Partition({2, 1}));
  CHECK_THROWS_AS(parse_partition("4,,1"), Error);
  CHECK_THROWS_AS(parse_partition("x"), Error);
  CHECK_THROWS_AS(parse_partition(""), Error);
}

TEST_CASE("enumerate_partitions") {
  // Partitions with 3 parts and largest part 3: 3 followed by a pair from {3,2,1}.
  const auto parts = enumerate_partitions(3, 3);
  CHECK(parts.size() == 6);
  for (const auto& p : parts) {
    CHECK(p.size() == 3);
    CHECK(p.largest() == 3);
  }
  CHECK(enumerate_partitions(1, 5).size() == 1);
}

TEST_CASE("degree_product") {
  CHECK(degree_product(complete_bipartite(2, 2)) == 16);
  CHECK(degree_product(figure1_graph()) == 23040);
  CHECK(degree_product(star_graph(3)) == 3);
  CHECK(degree_product(build_graph(2, 2, std::vector<Edge>{{0, 0}})) == 0);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(complete_bipartite(2, 2)));
  CHECK_FALSE(is_connected(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 1}})));
  CHECK(is_connected(figure1_graph()));
  CHECK(is_connected(complete_bipartite(1, 1)));
  CHECK_FALSE(is_connected(build_graph(1, 2, std::vector<Edge>{{0, 0}})));
}

TEST_CASE("classify_regularity") {
  const auto c6 = classify_regularity(cycle_graph(3));
  CHECK(c6.kind == Regularity::Biregular);
  CHECK(c6.left_degree == 2);
  CHECK(c6.right_degree == 2);

  CHECK(classify_regularity(figure1_graph()).kind == Regularity::Irregular);

  const auto k23 = classify_regularity(complete_bipartite(2, 3));
  CHECK(k23.kind == Regularity::Biregular);
  CHECK(k23.left_degree == 3);
  CHECK(k23.right_degree == 2);

  // Path a0-b0-a1-b1: left degrees (1,2), right degrees (2,1).
  const auto path = classify_regularity(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 0}, {1, 1}}));
  CHECK(path.kind == Regularity::Irregular);
  const auto right_regular = classify_regularity(build_graph(3, 2, std::vector<Edge>{{0, 0}, {1, 0}, {1, 1}, {2, 1}}));
  CHECK(right_regular.kind == Regularity::RightRegular);
  CHECK(right_regular.right_degree == 2);
  CHECK_FALSE(right_regular.left_degree.has_value());
}

TEST_CASE("strip_degree_one") {
  const BipartiteGraph core = strip_degree_one(star_graph(3));
  CHECK(core.n() == 1);
  CHECK(core.m() == 1);
  CHECK(core.edge_count() == 1);

  CHECK(strip_degree_one(cycle_graph(3)) == cycle_graph(3));

  const BipartiteGraph fig = strip_degree_one(figure1_graph());
  CHECK(fig == from_partition(Partition({4, 4, 3, 3})));
  CHECK(fig.right_degrees() == std::vector<int>{4, 4, 4, 2});

  CHECK_THROWS_AS(strip_degree_one(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 1}})), Error);
}

TEST_CASE("strip_degree_one preserves tau, and D/(mn) on Ferrers graphs") {
  for (const auto& g : small_connected_corpus()) {
    if (g.edge_count() < 2) continue;
    CHECK(tau(strip_degree_one(g)) == tau(g));
  }
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 5; ++m) {
      for (const auto& p : enumerate_partitions(n, m)) {
        const BipartiteGraph g = from_partition(p);
        if (g.edge_count() < 2) continue;
        const BipartiteGraph s = strip_degree_one(g);
        mpq_class before(degree_product(g), g.n() * g.m());
        mpq_class after(degree_product(s), s.n() * s.m());
        before.canonicalize();
        after.canonicalize();
        CHECK(after == before);
      }
    }
  }
}

TEST_CASE("is_ferrers") {
  CHECK(is_ferrers(figure1_graph()) == Partition({4, 4, 3, 3, 1}));
  CHECK_FALSE(is_ferrers(cycle_graph(3)).has_value());
  CHECK(is_ferrers(complete_bipartite(2, 3)) == Partition({3, 3}));

  // Rows and columns in scrambled order still form a staircase.
  const BipartiteGraph scrambled = build_graph(3, 3, std::vector<Edge>{{0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(is_ferrers(scrambled) == Partition({3, 2, 1}));

  // Isolated vertices mean no partition with largest part m.
  CHECK_FALSE(is_ferrers(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 0}})).has_value());
}

TEST_CASE("is_ferrers decides exactly: brute force over row and column orders") {
  // Independent check: try every permutation of both sides for the staircase.
  auto staircase_exists = [](const BipartiteGraph& g) {
    std::vector<int> rows(g.n()), cols(g.m());
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        bool ok = true;
        for (int r = 0; r < g.n() && ok; ++r) {
          for (int c = 0; c < g.m() && ok; ++c) {
            if (!g.has_edge(rows[r], cols[c])) continue;
            if (r > 0 && !g.has_edge(rows[r - 1], cols[c])) ok = false;
            if (c > 0 && !g.has_edge(rows[r], cols[c - 1])) ok = false;
          }
        }
        if (ok) return true;
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return false;
  };
  for (const auto& g : small_connected_corpus()) {
    if (g.n() > 4 || g.m() > 4) continue;
    CHECK(is_ferrers(g).has_value() == staircase_exists(g));
  }
}

TEST_CASE("from_partition and is_ferrers round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      for (const auto& p : enumerate_partitions(n, m)) CHECK(is_ferrers(from_partition(p)) == p);
    }
  }
}

TEST_CASE("handshake") {
  for (const auto& g : small_connected_corpus()) {
    const auto a = g.left_degrees();
    const auto b = g.right_degrees();
    CHECK(std::accumulate(a.begin(), a.end(), 0) == g.edge_count());
    CHECK(std::accumulate(b.begin(), b.end(), 0) == g.edge_count());
  }
}

TEST_CASE("graph text format") {
  std::istringstream in("# K2,2 minus an edge\n2 2\n0 0\n\n0 1\n1 0\n");
  const BipartiteGraph g = read_graph(in);
  CHECK(g.edges() == std::vector<Edge>{{0, 0}, {0, 1}, {1, 0}});

  std::ostringstream out;
  write_graph(out, figure1_graph());
  std::istringstream back(out.str());
  CHECK(read_graph(back) == figure1_graph());

  std::istringstream bad("2 2\n0 x\n");
  CHECK_THROWS_AS(read_graph(bad), Error);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_graph(empty), Error);
  std::istringstream dup("1 1\n0 0\n0 0\n");
  CHECK_THROWS_AS(read_graph(dup), Error);
}

TEST_CASE("adjacency_hex") {
  CHECK(complete_bipartite(1, 1).adjacency_hex() == "1");
  CHECK(complete_bipartite(2, 2).adjacency_hex() == "f");
  // (0,1) and (1,0) in a 2x2 grid: bits 1 and 2.
  CHECK(build_graph(2, 2, std::vector<Edge>{{0, 1}, {1, 0}}).adjacency_hex() == "6");
}
