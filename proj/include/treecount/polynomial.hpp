#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace treecount {

/// Dense one-variable polynomial with big-integer coefficients c0..cd.
/// Trailing zero coefficients are always trimmed; the zero polynomial has
/// no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial linear(const mpz_class& c0, const mpz_class& c1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  // Zero beyond the degree.
  mpz_class coefficient(int k) const;

  mpz_class operator()(const mpz_class& t) const;
  mpq_class operator()(const mpq_class& t) const;
  double evaluate(double t) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  // "2y^2 + 2y", "y - 1", "0".
  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace treecount
