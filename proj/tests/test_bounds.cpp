#include <doctest.h>

#include <cmath>
#include <functional>

#include "test_graphs.hpp"
#include "treecount/bounds.hpp"
#include "treecount/spanning.hpp"

using namespace treecount;
using namespace treecount::testing;

namespace {

const BipartiteGraph k2 = complete_bipartite(1, 1);
const BipartiteGraph k22 = complete_bipartite(2, 2);
const BipartiteGraph c6 = cycle_graph(3);

bool close(double x, double y, double rel = 1e-12) { return std::abs(x - y) <= rel * std::max(1.0, std::abs(y)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("ehrenborg_bound") {
  CHECK(ehrenborg_bound(k22) == 4);
  CHECK(ehrenborg_bound(figure1_graph()) == 1152);
  CHECK(ehrenborg_bound(c6) == mpq_class(64, 9));
  CHECK(ehrenborg_bound(k2) == 1);
}

TEST_CASE("grimmett_bound") {
  CHECK(grimmett_bound_exact(k22) == mpq_class(128, 27));
  CHECK(close(grimmett_bound(k22), 4.7407407407407405));
  CHECK(grimmett_bound_exact(c6) == mpq_class(41472, 3125));
  CHECK(close(grimmett_bound(c6), 13.27104));
  CHECK(grimmett_bound(k2) == 1.0);
}

TEST_CASE("bozkurt_bound") {
  CHECK(bozkurt_bound(c6) == mpq_class(32, 3));
  CHECK(bozkurt_bound(k22) == 4);
  CHECK(bozkurt_bound(figure1_graph()) == 1536);
  CHECK(code_of([] { bozkurt_bound(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 1}})); }) ==
        ErrorCode::Disconnected);
}

TEST_CASE("intermediate_bound") {
  CHECK(intermediate_bound_exact(k22) == 4);
  CHECK(intermediate_bound(k22) == 4.0);
  CHECK(intermediate_bound_exact(c6) == 6);
  CHECK(intermediate_bound(c6) == 6.0);
  CHECK(intermediate_bound_exact(complete_bipartite(2, 3)) == 12);
  CHECK(intermediate_bound(complete_bipartite(2, 3)) >= 12.0);
  CHECK(code_of([] { intermediate_bound(complete_bipartite(1, 3)); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { intermediate_bound(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 1}})); }) ==
        ErrorCode::Disconnected);
}

TEST_CASE("bounds dominate tau on small graphs") {
  for (const auto& g : small_connected_corpus(9)) {
    const mpq_class t(tau(g));
    CHECK(t <= bozkurt_bound(g));
    CHECK(t <= grimmett_bound_exact(g));
    if (g.n() >= 2) CHECK(t <= intermediate_bound_exact(g));
    if (classify_regularity(g).kind != Regularity::Irregular) CHECK(t <= ehrenborg_bound(g));
  }
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const BipartiteGraph g = complete_bipartite(n, m);
      CHECK(mpq_class(tau(g)) == ehrenborg_bound(g));
    }
  }
}

TEST_CASE("TailBoundQuery validation") {
  const auto q = TailBoundQuery::from_k(3, 3, 2, 1);
  CHECK(q.b() == 2);
  CHECK(q.theta() == 1);
  CHECK(TailBoundQuery::from_theta(2, 3, 3, mpq_class(3, 2)).k() == 1);

  CHECK(code_of([] { TailBoundQuery::from_k(3, 2, 1, 0); }) == ErrorCode::InfeasibleSpec);
  CHECK(code_of([] { TailBoundQuery::from_k(3, 3, 2, 2); }) == ErrorCode::InfeasibleK);
  CHECK(code_of([] { TailBoundQuery::from_theta(3, 3, 2, mpq_class(1, 2)); }) == ErrorCode::InfeasibleK);
  CHECK(code_of([] { TailBoundQuery::from_theta(3, 3, 2, -1); }) == ErrorCode::InvalidTheta);
}

TEST_CASE("tail_bound_gt") {
  CHECK(close(tail_bound_gt(TailBoundQuery::from_k(3, 3, 2, 1)), 64.0 / 9.0));
  CHECK(close(tail_bound_gt(TailBoundQuery::from_k(3, 3, 3, 1)), 81.0));
  CHECK(code_of([] { tail_bound_gt(TailBoundQuery::from_k(3, 3, 2, 0)); }) == ErrorCode::InvalidTheta);
  // theta = 3/2 on K_{2,3} seen from a degree-2 vertex: a = 3, b = 2, k = 1.
  const auto q = TailBoundQuery::from_k(2, 3, 3, 1);
  CHECK(q.theta() == mpq_class(3, 2));
  CHECK(close(tail_bound_gt(q), theta_factor(1.5) * 9.0 * 8.0 / 6.0));
}

TEST_CASE("tail_bound_le") {
  CHECK(close(tail_bound_le(TailBoundQuery::from_k(3, 3, 2, 1)), 64.0 / 6.0));
  CHECK(close(tail_bound_le(TailBoundQuery::from_k(2, 2, 2, 1)), 8.0));
  // k = 0 gives a^n b^m / ((m-1) n).
  CHECK(close(tail_bound_le(TailBoundQuery::from_k(4, 2, 1, 0)), 4.0 / 4.0));
  CHECK(code_of([] { tail_bound_le(TailBoundQuery::from_k(2, 3, 3, 1)); }) == ErrorCode::InvalidTheta);
  CHECK(code_of([] { tail_bound_le(TailBoundQuery::from_k(3, 1, 1, 0)); }) == ErrorCode::TooSmall);
}

TEST_CASE("eval_both") {
  CHECK(close(eval_both(TailBoundQuery::from_k(3, 3, 2, 0)), 0.25 * 64.0 / 6.0));
  // Sharp for complete bipartite graphs at theta = 0.
  CHECK(close(eval_both(TailBoundQuery::from_k(2, 2, 2, 0)), 2.0, 1e-9));
  CHECK(close(eval_both(TailBoundQuery::from_k(2, 3, 3, 0)), 8.0, 1e-9));
  // theta = 1 collapses to a^n b^m / (m n).
  CHECK(close(eval_both(TailBoundQuery::from_k(3, 3, 2, 1)), 64.0 / 9.0));
  CHECK(close(eval_both(TailBoundQuery::from_k(4, 4, 2, 1)), 16.0));
  CHECK(code_of([] { eval_both(TailBoundQuery::from_k(3, 1, 1, 0)); }) == ErrorCode::Degenerate);
}

TEST_CASE("theta_factor never exceeds one") {
  CHECK(theta_factor(1.0) == 1.0);
  for (int k = 1; k <= 2000; ++k) {
    const double theta = k * 0.005;
    CHECK(theta_factor(theta) <= 1.0 + 1e-15);
  }
}

TEST_CASE("lemma2_gap") {
  const Lemma2Gap k2_gap = lemma2_gap(laplacian(k2));
  CHECK(k2_gap.lhs == 2);
  CHECK(k2_gap.rhs == 2);

  // Four diagonal terms of 2 * tau each.
  const Lemma2Gap k22_gap = lemma2_gap(laplacian(k22));
  CHECK(k22_gap.lhs == 32);
  CHECK(k22_gap.rhs == mpq_class(1024, 27));
  CHECK(close(k22_gap.rhs_value(), 37.925925925925924));

  const Lemma2Gap diag = lemma2_gap(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(diag.lhs == 0);
  CHECK(diag.rhs == 0);

  CHECK(code_of([] { lemma2_gap(IntMatrix{{1, 2}, {3, 4}}); }) == ErrorCode::NonSymmetric);
  CHECK(code_of([] { lemma2_gap(IntMatrix{{1, 0}, {0, 1}}); }) == ErrorCode::NotSingular);
  CHECK(code_of([] { lemma2_gap(IntMatrix{{1, 0}, {0, -1}}); }) == ErrorCode::NotPSD);
  CHECK(code_of([] { lemma2_gap(IntMatrix{{0}}); }) == ErrorCode::TooSmall);
}

TEST_CASE("lemma2_gap on Laplacians is the Grimmett-type inequality") {
  for (const auto& g : small_connected_corpus(6)) {
    const Lemma2Gap gap = lemma2_gap(laplacian(g));
    CHECK(gap.lhs == mpq_class(tau(g) * 2 * g.edge_count()));
    CHECK(gap.lhs <= gap.rhs);
  }
}

TEST_CASE("conjecture_report") {
  const BoundReport fig = conjecture_report(figure1_graph());
  CHECK(fig.tau == 1152);
  REQUIRE(fig.find("ehrenborg") != nullptr);
  CHECK(std::get<mpq_class>(fig.find("ehrenborg")->value) == 1152);
  CHECK(fig.violations.empty());
  CHECK_FALSE(fig.counterexample_candidate);
  for (const auto& [name, t] : fig.tightness) {
    if (name == "ehrenborg") CHECK(t == 1.0);
  }
  CHECK(fig.graph.ferrers == Partition({4, 4, 3, 3, 1}));

  const BoundReport cyc = conjecture_report(c6);
  CHECK(cyc.tau == 6);
  CHECK(close(cyc.find("ehrenborg")->as_double(), 64.0 / 9.0));
  CHECK(cyc.find("intermediate")->as_double() == 6.0);
  CHECK(cyc.violations.empty());

  const BoundReport edge = conjecture_report(k2);
  CHECK(edge.find("grimmett")->as_double() == 1.0);
  CHECK(std::get<mpq_class>(edge.find("ehrenborg")->value) == 1);
  CHECK_FALSE(edge.find("intermediate")->applicable());
  CHECK_FALSE(edge.find("intermediate")->reason.empty());
  CHECK(edge.min_tightness() == 1.0);

  CHECK_THROWS_AS(conjecture_report(build_graph(2, 2, std::vector<Edge>{{0, 0}, {1, 1}})), Error);
}
