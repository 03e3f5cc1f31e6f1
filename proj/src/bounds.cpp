#include "treecount/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "treecount/spanning.hpp"

namespace treecount {

namespace {

mpq_class rational_power(const mpq_class& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpz_class int_power(long base, unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

// (s/(s-1))^(s-1)
mpq_class am_gm_factor(int s) { return rational_power(mpq_class(s, s - 1), static_cast<unsigned long>(s - 1)); }

void require_connected(const BipartiteGraph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, std::string(what) + " needs a connected graph");
}

}  // namespace

double BoundValue::as_double() const {
  if (const auto* q = std::get_if<mpq_class>(&value)) return q->get_d();
  if (const auto* d = std::get_if<double>(&value)) return *d;
  return std::numeric_limits<double>::quiet_NaN();
}

mpq_class ehrenborg_bound(const BipartiteGraph& g) {
  mpq_class out(degree_product(g), mpz_class(g.n()) * g.m());
  out.canonicalize();
  return out;
}

mpq_class grimmett_bound_exact(const BipartiteGraph& g) {
  const int total = g.vertex_count();
  if (g.edge_count() == 0) throw Error(ErrorCode::Degenerate, "graph has no edges");
  mpq_class out(degree_product(g), mpz_class(2 * g.edge_count()));
  out.canonicalize();
  return am_gm_factor(total) * out;
}

double grimmett_bound(const BipartiteGraph& g) { return grimmett_bound_exact(g).get_d(); }

mpq_class bozkurt_bound(const BipartiteGraph& g) {
  require_connected(g, "bozkurt_bound");
  mpq_class out(degree_product(g), mpz_class(g.edge_count()));
  out.canonicalize();
  return out;
}

mpq_class intermediate_bound_exact(const BipartiteGraph& g) {
  require_connected(g, "intermediate_bound");
  const int n = g.n();
  if (n < 2) throw Error(ErrorCode::TooSmall, "intermediate_bound needs n >= 2");
  const RatMatrix c = reduced_matrix(g);
  // prod_i (1 - sum_k 1/(a_i b_k)) * prod a_i == prod_i c_ii
  mpq_class diag_product = 1;
  mpq_class trace = 0;
  for (int i = 0; i < n; ++i) {
    diag_product *= c(i, i);
    trace += c(i, i);
  }
  if (trace <= 0) throw Error(ErrorCode::Degenerate, "reduced matrix has non-positive trace");
  mpz_class right_product = 1;
  for (int b : g.right_degrees()) right_product *= b;
  return am_gm_factor(n) * diag_product / trace * mpq_class(right_product);
}

double intermediate_bound(const BipartiteGraph& g) { return intermediate_bound_exact(g).get_d(); }

// --- degree-tail bounds ---

TailBoundQuery::TailBoundQuery(int n, int m, int a, const mpq_class& theta) : n_(n), m_(m), a_(a), theta_(theta) {
  if (n < 1 || m < 1 || a < 1) throw Error(ErrorCode::InfeasibleSpec, "sizes and degree must be positive");
  if ((static_cast<long>(a) * n) % m != 0) throw Error(ErrorCode::InfeasibleSpec, "a*n must be divisible by m");
  b_ = static_cast<int>(static_cast<long>(a) * n / m);
  if (theta_ < 0) throw Error(ErrorCode::InvalidTheta, "theta must be non-negative");
  mpq_class k = theta_ * b_ / a_;
  k.canonicalize();
  if (k.get_den() != 1) throw Error(ErrorCode::InfeasibleK, "k = theta*b/a = " + k.get_str() + " is not an integer");
  if (k >= b_) throw Error(ErrorCode::InfeasibleK, "k = " + k.get_str() + " must be below b = " + std::to_string(b_));
  k_ = static_cast<int>(k.get_num().get_si());
}

TailBoundQuery TailBoundQuery::from_k(int n, int m, int a, int k) {
  if (m < 1 || n < 1 || a < 1) throw Error(ErrorCode::InfeasibleSpec, "sizes and degree must be positive");
  if ((static_cast<long>(a) * n) % m != 0) throw Error(ErrorCode::InfeasibleSpec, "a*n must be divisible by m");
  const long b = static_cast<long>(a) * n / m;
  if (k < 0) throw Error(ErrorCode::InfeasibleK, "k must be non-negative");
  mpq_class theta(mpz_class(static_cast<long>(k) * a), mpz_class(b));
  theta.canonicalize();
  return TailBoundQuery(n, m, a, theta);
}

TailBoundQuery TailBoundQuery::from_theta(int n, int m, int a, const mpq_class& theta) {
  return TailBoundQuery(n, m, a, theta);
}

double theta_factor(double theta) { return std::exp((theta - 1.0) / theta) / theta; }

namespace {

// a^n b^m / (m * denominator_n)
double regular_product_over(const TailBoundQuery& q, long side_factor) {
  mpq_class out(int_power(q.a(), q.n()) * int_power(q.b(), q.m()), mpz_class(side_factor) * q.n());
  out.canonicalize();
  return out.get_d();
}

double theta_power(const TailBoundQuery& q) {
  if (q.k() == 0) return 1.0;
  return std::pow(theta_factor(q.theta().get_d()), q.k());
}

}  // namespace

double tail_bound_gt(const TailBoundQuery& q) {
  if (q.theta() < 1) throw Error(ErrorCode::InvalidTheta, "tail_bound_gt needs theta >= 1");
  return theta_power(q) * regular_product_over(q, q.m());
}

double tail_bound_le(const TailBoundQuery& q) {
  if (q.theta() > 1) throw Error(ErrorCode::InvalidTheta, "tail_bound_le needs theta <= 1");
  if (q.m() < 2) throw Error(ErrorCode::TooSmall, "tail_bound_le needs m >= 2");
  return theta_power(q) * regular_product_over(q, q.m() - 1);
}

double eval_both(const TailBoundQuery& q) {
  const mpq_class a(q.a());
  if (q.theta() >= a) throw Error(ErrorCode::ThetaGeqA, "eval_both needs theta < a");
  mpq_class shift = a * (q.theta() - 1) / (mpq_class(q.m()) * (a - q.theta())) + 1;
  if (shift <= 0) throw Error(ErrorCode::Degenerate, "eval_both denominator vanishes (m = 1 star)");
  const double theta = q.theta().get_d();
  const int excess = q.b() - q.k();
  const double ratio = std::pow((q.a() - 1.0) / (q.a() - theta), excess);
  const double theta_k = q.k() == 0 ? 1.0 : std::pow(theta, q.k());
  return ratio / (theta_k * shift.get_d()) * regular_product_over(q, q.m());
}

// --- diagonal-cofactor inequality ---

Lemma2Gap lemma2_gap(const RatMatrix& a) {
  const int s = a.size();
  if (s < 2) throw Error(ErrorCode::TooSmall, "lemma2_gap needs s >= 2");
  if (!a.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "lemma2_gap needs a symmetric matrix");

  const RealMatrix real = to_real(a);
  double norm = 0.0;
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) norm += real(r, c) * real(r, c);
  }
  const double tol = 1e-9 * std::max(1.0, std::sqrt(norm));
  const std::vector<double> eig = sym_eigenvalues(real);
  if (eig.back() < -tol) throw Error(ErrorCode::NotPSD, "smallest eigenvalue " + std::to_string(eig.back()));
  const double smallest_abs = std::abs(*std::min_element(eig.begin(), eig.end(), [](double x, double y) {
    return std::abs(x) < std::abs(y);
  }));
  if (smallest_abs > tol) throw Error(ErrorCode::NotSingular, "no eigenvalue near zero");

  Lemma2Gap gap;
  gap.lhs = 0;
  gap.rhs = am_gm_factor(s);
  for (int i = 0; i < s; ++i) {
    if (a(i, i) != 0) gap.lhs += a(i, i) * det_rat(minor(a, i, i));
    gap.rhs *= a(i, i);
  }
  return gap;
}

Lemma2Gap lemma2_gap(const IntMatrix& a) {
  return lemma2_gap(a.map([](const mpz_class& x) { return mpq_class(x); }));
}

// --- report ---

GraphDescriptor describe(const BipartiteGraph& g) {
  GraphDescriptor d;
  d.n = g.n();
  d.m = g.m();
  d.edges = g.edge_count();
  d.left_degrees = g.left_degrees();
  d.right_degrees = g.right_degrees();
  d.regularity = classify_regularity(g);
  d.ferrers = is_ferrers(g);
  d.graph_id = g.adjacency_hex();
  return d;
}

double BoundReport::min_tightness() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [name, t] : tightness) best = std::min(best, t);
  return best;
}

const BoundValue* BoundReport::find(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

BoundReport conjecture_report(const BipartiteGraph& g) {
  require_connected(g, "conjecture_report");
  BoundReport report;
  report.graph = describe(g);
  report.tau = tau(g);

  report.bounds.push_back({"ehrenborg", ehrenborg_bound(g), {}});
  report.bounds.push_back({"bozkurt", bozkurt_bound(g), {}});
  report.bounds.push_back({"grimmett", grimmett_bound(g), {}});
  BoundValue intermediate{"intermediate", std::monostate{}, {}};
  if (g.n() < 2) {
    intermediate.reason = "needs n >= 2";
  } else {
    try {
      intermediate.value = intermediate_bound(g);
    } catch (const Error& e) {
      intermediate.reason = e.what();
    }
  }
  report.bounds.push_back(std::move(intermediate));

  const mpq_class tau_q(report.tau);
  const double tau_d = report.tau.get_d();
  for (const auto& b : report.bounds) {
    if (!b.applicable()) continue;
    const double bound_d = b.as_double();
    report.tightness.emplace_back(b.name, bound_d > 0 ? tau_d / bound_d : std::numeric_limits<double>::infinity());
    bool violated = false;
    if (const auto* exact = std::get_if<mpq_class>(&b.value)) {
      violated = tau_q > *exact;
    } else if (tau_d > bound_d) {
      violated = tau_d > bound_d * (1.0 + kFloatBoundSlack);
      if (!violated) report.near_misses.push_back(b.name);
    }
    if (violated) {
      report.violations.push_back(b.name);
      if (b.name == "ehrenborg") report.counterexample_candidate = true;
    }
  }
  return report;
}

}  // namespace treecount
