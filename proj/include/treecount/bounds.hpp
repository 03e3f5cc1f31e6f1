#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "treecount/graph.hpp"
#include "treecount/linalg.hpp"

namespace treecount {

// Relative slack used when comparing an exact count against a float bound.
inline constexpr double kFloatBoundSlack = 1e-9;

/// Upper bound on tau, exact when the formula is rational.
struct BoundValue {
  std::string name;
  std::variant<std::monostate, mpq_class, double> value;
  std::string reason;  // why not applicable

  bool applicable() const { return !std::holds_alternative<std::monostate>(value); }
  bool is_exact() const { return std::holds_alternative<mpq_class>(value); }
  double as_double() const;
};

/// D(G) / (m n).
mpq_class ehrenborg_bound(const BipartiteGraph& g);

/// (N/(N-1))^(N-1) * prod(d_v) / (2|E|) over all N = n + m vertices.
double grimmett_bound(const BipartiteGraph& g);
mpq_class grimmett_bound_exact(const BipartiteGraph& g);

/// D(G) / |E|; connected graphs only.
mpq_class bozkurt_bound(const BipartiteGraph& g);

/// Bound obtained from the reduced matrix C without any regularity
/// assumption:
///   (n/(n-1))^(n-1) * prod_i(1 - sum_k 1/(a_i b_k)) / sum_i(a_i - sum_k 1/b_k) * D(G).
/// Needs a connected graph with n >= 2.
double intermediate_bound(const BipartiteGraph& g);
mpq_class intermediate_bound_exact(const BipartiteGraph& g);

/// Parameters of a degree-tail bound on a biregular graph: first-class
/// degree a, second-class degree b = a n / m, and theta with k = theta b / a.
class TailBoundQuery {
 public:
  // theta is derived as k a / b.
  static TailBoundQuery from_k(int n, int m, int a, int k);
  static TailBoundQuery from_theta(int n, int m, int a, const mpq_class& theta);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int k() const noexcept { return k_; }
  const mpq_class& theta() const noexcept { return theta_; }

 private:
  TailBoundQuery(int n, int m, int a, const mpq_class& theta);

  int n_, m_, a_, b_, k_;
  mpq_class theta_;
};

// theta^-1 * exp((theta - 1) / theta); never exceeds 1 for theta > 0.
double theta_factor(double theta);

/// Bound on the number of spanning trees in which a second-class vertex has
/// degree > k:  theta_factor^k * a^n b^m / (m n). Requires theta >= 1.
double tail_bound_gt(const TailBoundQuery& q);

/// Bound on the number of spanning trees in which a second-class vertex has
/// degree <= k+1:  theta_factor^k * a^n b^m / ((m-1) n). Requires theta <= 1
/// and m >= 2.
double tail_bound_le(const TailBoundQuery& q);

/// The sharper expression both tail bounds relax:
///   (a-1)^(b-k) / ((a-theta)^(b-k) theta^k (a(theta-1)/(m(a-theta)) + 1)) * a^n b^m / (m n).
/// At theta = k = 0 this is (1-1/a)^b a^n b^m / ((m-1) n). Requires theta < a.
double eval_both(const TailBoundQuery& q);

struct Lemma2Gap {
  mpq_class lhs;  // sum_i a_ii det(A | (i,i))
  mpq_class rhs;  // (s/(s-1))^(s-1) prod_i a_ii
  double lhs_value() const { return lhs.get_d(); }
  double rhs_value() const { return rhs.get_d(); }
};

/// Both sides of the diagonal-cofactor inequality for a symmetric positive
/// semidefinite singular matrix. PSD and singularity are checked on the
/// eigenvalues with tolerance 1e-9 (relative to the matrix norm when > 1).
Lemma2Gap lemma2_gap(const RatMatrix& a);
Lemma2Gap lemma2_gap(const IntMatrix& a);

struct GraphDescriptor {
  int n = 0;
  int m = 0;
  int edges = 0;
  std::vector<int> left_degrees;
  std::vector<int> right_degrees;
  RegularityClass regularity;
  std::optional<Partition> ferrers;
  std::string graph_id;
};

GraphDescriptor describe(const BipartiteGraph& g);

struct BoundReport {
  GraphDescriptor graph;
  mpz_class tau;
  std::vector<BoundValue> bounds;
  std::vector<std::pair<std::string, double>> tightness;  // tau / bound
  std::vector<std::string> violations;
  std::vector<std::string> near_misses;  // tau above a float bound but inside the slack
  bool counterexample_candidate = false;  // the D/(mn) bound is violated

  double min_tightness() const;
  const BoundValue* find(const std::string& name) const;
};

/// tau together with every applicable bound. Bounds that are undefined for
/// the graph (n = 1 for the intermediate bound) are kept as not-applicable
/// with a reason. Needs a connected graph.
BoundReport conjecture_report(const BipartiteGraph& g);

}  // namespace treecount
