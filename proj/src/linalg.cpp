#include "treecount/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace treecount {

mpz_class det_int(IntMatrix a) {
  const int s = a.size();
  if (s == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < s - 1; ++k) {
    if (a(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < s; ++r) {
        if (a(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < s; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < s; ++i) {
      for (int j = k + 1; j < s; ++j) {
        // Exact: the Sylvester identity guarantees prev divides this.
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  mpz_class det = a(s - 1, s - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

mpq_class det_rat(const RatMatrix& a) {
  const int s = a.size();
  IntMatrix scaled(s);
  mpz_class scale = 1;
  for (int r = 0; r < s; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < s; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (int c = 0; c < s; ++c) {
      scaled(r, c) = a(r, c).get_num() * (l / a(r, c).get_den());
    }
    scale *= l;
  }
  mpq_class out(det_int(std::move(scaled)), scale);
  out.canonicalize();
  return out;
}

IntMatrix evaluate_at(const PolyMatrix& a, const mpz_class& t) {
  return a.map([&](const IntPolynomial& p) { return p(t); });
}

IntPolynomial det_poly(const PolyMatrix& a) {
  const int s = a.size();
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      if (a(r, c).degree() > 1) {
        throw Error(ErrorCode::IndexOutOfRange, "det_poly entries must have degree <= 1");
      }
    }
  }
  // Newton divided differences on nodes 0..s; with unit spacing the k-th
  // difference is the k-th forward difference divided by k!.
  std::vector<mpq_class> diff(s + 1);
  for (int t = 0; t <= s; ++t) diff[t] = det_int(evaluate_at(a, t));
  for (int k = 1; k <= s; ++k) {
    for (int t = s; t >= k; --t) diff[t] = (diff[t] - diff[t - 1]) / k;
  }
  // Horner on the Newton form: p = d0 + (t-0)(d1 + (t-1)(d2 + ...)).
  std::vector<mpq_class> poly{diff[s]};
  for (int k = s - 1; k >= 0; --k) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * k;
    }
    next[0] += diff[k];
    poly = std::move(next);
  }
  std::vector<mpz_class> coeffs;
  coeffs.reserve(poly.size());
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) {
      throw Error(ErrorCode::NonIntegerInterpolation, "coefficient " + c.get_str() + " is not an integer");
    }
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

RealMatrix to_real(const IntMatrix& a) {
  return a.map([](const mpz_class& x) { return x.get_d(); });
}

RealMatrix to_real(const RatMatrix& a) {
  return a.map([](const mpq_class& x) { return x.get_d(); });
}

std::vector<double> sym_eigenvalues(const RealMatrix& input, double tol) {
  if (!input.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "sym_eigenvalues needs a symmetric matrix");
  RealMatrix a = input;
  const int s = a.size();

  double norm = 0.0;
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) norm += a(r, c) * a(r, c);
  }
  const double threshold = tol * std::max(1.0, std::sqrt(norm));

  auto off_norm = [&] {
    double sum = 0.0;
    for (int r = 0; r < s; ++r) {
      for (int c = r + 1; c < s; ++c) sum += 2.0 * a(r, c) * a(r, c);
    }
    return std::sqrt(sum);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
    for (int p = 0; p < s - 1; ++p) {
      for (int q = p + 1; q < s; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < s; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < s; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(s);
  for (int i = 0; i < s; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> sym_eigenvalues(const IntMatrix& a, double tol) {
  if (!a.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "sym_eigenvalues needs a symmetric matrix");
  return sym_eigenvalues(to_real(a), tol);
}

std::vector<double> sym_eigenvalues(const RatMatrix& a, double tol) {
  if (!a.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "sym_eigenvalues needs a symmetric matrix");
  return sym_eigenvalues(to_real(a), tol);
}

}  // namespace treecount
