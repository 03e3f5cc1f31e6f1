#include "treecount/spanning.hpp"

#include <charconv>

namespace treecount {

void VertexRef::validate(const BipartiteGraph& g) const {
  const int limit = side == Side::First ? g.n() : g.m();
  if (index < 0 || index >= limit) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + to_string() + " is not in the graph");
  }
}

std::string VertexRef::to_string() const {
  return std::string(side == Side::First ? "first:" : "second:") + std::to_string(index);
}

VertexRef parse_vertex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "vertex must look like side:index, got \"" + std::string(text) + "\"");
  }
  const std::string_view side = text.substr(0, colon);
  const std::string_view index = text.substr(colon + 1);
  VertexRef v;
  if (side == "first" || side == "a" || side == "left") {
    v.side = Side::First;
  } else if (side == "second" || side == "b" || side == "right") {
    v.side = Side::Second;
  } else {
    throw Error(ErrorCode::ParseError, "unknown side \"" + std::string(side) + "\"");
  }
  auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), v.index);
  if (ec != std::errc{} || ptr != index.data() + index.size() || v.index < 0) {
    throw Error(ErrorCode::ParseError, "bad vertex index \"" + std::string(index) + "\"");
  }
  return v;
}

IntMatrix laplacian(const BipartiteGraph& g) {
  const int n = g.n();
  IntMatrix l(g.vertex_count(), 0);
  for (int i = 0; i < n; ++i) l(i, i) = g.left_degree(i);
  for (int j = 0; j < g.m(); ++j) l(n + j, n + j) = g.right_degree(j);
  for (const auto& [i, j] : g.edges()) {
    l(i, n + j) = -1;
    l(n + j, i) = -1;
  }
  return l;
}

mpz_class laplacian_cofactor(const BipartiteGraph& g, int i) { return det_int(minor(laplacian(g), i, i)); }

mpz_class tau(const BipartiteGraph& g) { return laplacian_cofactor(g, 0); }

double tau_spectral(const BipartiteGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "tau_spectral needs a connected graph");
  const std::vector<double> eig = sym_eigenvalues(laplacian(g));
  double product = 1.0;
  for (std::size_t k = 0; k + 1 < eig.size(); ++k) product *= eig[k];
  return product / static_cast<double>(eig.size());
}

RatMatrix reduced_matrix(const BipartiteGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "reduced_matrix needs a connected graph");
  const int n = g.n();
  RatMatrix c(n, 0);
  for (int i = 0; i < n; ++i) c(i, i) = g.left_degree(i);
  for (int j = 0; j < g.m(); ++j) {
    const mpq_class share(1, g.right_degree(j));
    for (int i = 0; i < n; ++i) {
      if (!g.has_edge(i, j)) continue;
      for (int i2 = 0; i2 < n; ++i2) {
        if (g.has_edge(i2, j)) c(i, i2) -= share;
      }
    }
  }
  return c;
}

mpq_class reduced_cofactor(const RatMatrix& c, int i) { return det_rat(minor(c, i, i)); }

void apply_transvection_pair(RatMatrix& x, int n, int i, int j, const mpq_class& lambda) {
  const int s = x.size();
  const int pivot = n + j;
  // Left factor T_{n+j,i}(l) = I + l e_{i,n+j}: row i += l * row (n+j).
  for (int c = 0; c < s; ++c) x(i, c) += lambda * x(pivot, c);
  // Right factor T_{i,n+j}(l) = I + l e_{n+j,i}: column i += l * column (n+j).
  for (int r = 0; r < s; ++r) x(r, i) += lambda * x(r, pivot);
}

bool transvection_check(const BipartiteGraph& g) {
  const RatMatrix c = reduced_matrix(g);
  const int n = g.n();
  const int m = g.m();
  RatMatrix x = laplacian(g).map([](const mpz_class& v) { return mpq_class(v); });
  for (const auto& [i, j] : g.edges()) apply_transvection_pair(x, n, i, j, mpq_class(1, g.right_degree(j)));

  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      if (x(r, col) != c(r, col)) return false;
    }
    for (int j = 0; j < m; ++j) {
      if (x(r, n + j) != 0 || x(n + j, r) != 0) return false;
    }
  }
  for (int j = 0; j < m; ++j) {
    for (int j2 = 0; j2 < m; ++j2) {
      const mpq_class expected = j == j2 ? mpq_class(g.right_degree(j)) : mpq_class(0);
      if (x(n + j, n + j2) != expected) return false;
    }
  }
  return true;
}

PolyMatrix generalized_laplacian(const BipartiteGraph& g, const VertexRef& v) {
  v.validate(g);
  const int n = g.n();
  const int target = v.position(g);
  const IntPolynomial y = IntPolynomial::linear(0, 1);
  const IntPolynomial one = IntPolynomial::constant(1);
  auto weight = [&](int pos) { return pos == target ? y : one; };

  PolyMatrix l(g.vertex_count(), IntPolynomial{});
  for (const auto& [i, j] : g.edges()) {
    const int u = i;
    const int w = n + j;
    const IntPolynomial product = weight(u) * weight(w);
    l(u, u) += product;
    l(w, w) += product;
    l(u, w) -= product;
    l(w, u) -= product;
  }
  return l;
}

IntPolynomial degree_polynomial(const BipartiteGraph& g, const VertexRef& v) {
  v.validate(g);
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "degree_polynomial needs a connected graph");
  const int drop = v.side == Side::Second ? 0 : g.n();
  return det_poly(minor(generalized_laplacian(g, v), drop, drop));
}

mpz_class tail_count(const IntPolynomial& degree_poly, int k, TailMode mode) {
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "tail threshold must be non-negative");
  mpz_class total = 0;
  for (int d = 0; d <= degree_poly.degree(); ++d) {
    const bool take = mode == TailMode::StrictlyGreater ? d > k : d <= k;
    if (take) total += degree_poly.coefficient(d);
  }
  return total;
}

mpz_class tail_count(const BipartiteGraph& g, const DegreeTailQuery& q) {
  return tail_count(degree_polynomial(g, q.vertex), q.k, q.mode);
}

}  // namespace treecount
