#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "treecount/graph.hpp"
#include "treecount/linalg.hpp"
#include "treecount/polynomial.hpp"

namespace treecount {

enum class Side { First, Second };

struct VertexRef {
  Side side = Side::Second;
  int index = 0;

  // Position in the Laplacian ordering (first class, then second class).
  int position(const BipartiteGraph& g) const { return side == Side::First ? index : g.n() + index; }
  void validate(const BipartiteGraph& g) const;
  std::string to_string() const;  // "first:2", "second:0"

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

// Accepts "first:i"/"second:j" and the short forms "a:i"/"b:j".
VertexRef parse_vertex(std::string_view text);

enum class TailMode { StrictlyGreater, AtMost };

struct DegreeTailQuery {
  VertexRef vertex;
  int k = 0;
  TailMode mode = TailMode::StrictlyGreater;
};

/// Laplacian in block order: first class 0..n-1, then second class 0..m-1.
IntMatrix laplacian(const BipartiteGraph& g);

// Cofactor det(L | (i, i)).
mpz_class laplacian_cofactor(const BipartiteGraph& g, int i);

/// Number of spanning trees, as the (0,0) cofactor of the Laplacian.
mpz_class tau(const BipartiteGraph& g);

/// (1/N) times the product of the N-1 largest Laplacian eigenvalues.
/// Floating-point; used only to cross-check tau.
double tau_spectral(const BipartiteGraph& g);

/// The n x n matrix left in the first-class block after eliminating every
/// edge entry of the Laplacian with the second-class rows:
///   c_ii = a_i - sum over neighbours k of 1/b_k,
///   c_ij = -(sum over common neighbours k of 1/b_k).
RatMatrix reduced_matrix(const BipartiteGraph& g);

// det(C | (i, i)); the 0x0 minor of a 1x1 C counts as 1.
mpq_class reduced_cofactor(const RatMatrix& c, int i);

/// Applies S_{i,j}(X) = T_{n+j,i}(1/b_j) X T_{i,n+j}(1/b_j) for every edge
/// (i, j), with T_{p,q}(l) = I + l e_{qp}. True iff the result is block
/// diagonal with diag(b_1..b_m) in the lower block and reduced_matrix(g) in
/// the upper block, compared exactly.
bool transvection_check(const BipartiteGraph& g);

// One transvection step, in place. Exposed for testing against explicit
// matrix products.
void apply_transvection_pair(RatMatrix& x, int n, int i, int j, const mpq_class& lambda);

/// Generalized Laplacian with weight y on `v` and 1 elsewhere: diagonal
/// entries are sums of endpoint-weight products, off-diagonals the negated
/// products. All entries have degree <= 1 in y because the graph is bipartite.
PolyMatrix generalized_laplacian(const BipartiteGraph& g, const VertexRef& v);

/// Spanning-tree generating polynomial in the weight of `v`: the coefficient
/// of y^d counts spanning trees in which v has degree d. The cofactor is
/// taken at (0,0) when v is second-class and at (n,n) when v is first-class,
/// so v's own row and column are never removed.
IntPolynomial degree_polynomial(const BipartiteGraph& g, const VertexRef& v);

mpz_class tail_count(const BipartiteGraph& g, const DegreeTailQuery& q);
mpz_class tail_count(const IntPolynomial& degree_poly, int k, TailMode mode);

}  // namespace treecount
