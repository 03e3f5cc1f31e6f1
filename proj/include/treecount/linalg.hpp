#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

#include "treecount/error.hpp"
#include "treecount/polynomial.hpp"

namespace treecount {

/// Dense square matrix, row-major. A 0x0 matrix is allowed (its determinant
/// is 1 by convention).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int size, const T& fill = T()) : size_(size), data_(std::size_t(size) * size, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : size_(static_cast<int>(rows.size())) {
    data_.reserve(std::size_t(size_) * size_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != size_) {
        throw Error(ErrorCode::IndexOutOfRange, "matrix literal is not square");
      }
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int size) {
    Matrix out(size, T(0));
    for (int i = 0; i < size; ++i) out(i, i) = T(1);
    return out;
  }

  int size() const noexcept { return size_; }

  T& operator()(int r, int c) { return data_[std::size_t(r) * size_ + c]; }
  const T& operator()(int r, int c) const { return data_[std::size_t(r) * size_ + c]; }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(size_);
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  bool is_symmetric() const {
    for (int r = 0; r < size_; ++r) {
      for (int c = r + 1; c < size_; ++c) {
        if (!((*this)(r, c) == (*this)(c, r))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int size_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;
using PolyMatrix = Matrix<IntPolynomial>;
using RealMatrix = Matrix<double>;

/// Matrix with row `row` and column `col` removed.
template <class T>
Matrix<T> minor(const Matrix<T>& a, int row, int col) {
  const int s = a.size();
  if (s < 1 || row < 0 || row >= s || col < 0 || col >= s) {
    throw Error(ErrorCode::IndexOutOfRange, "minor index outside the matrix");
  }
  Matrix<T> out(s - 1);
  for (int r = 0, rr = 0; r < s; ++r) {
    if (r == row) continue;
    for (int c = 0, cc = 0; c < s; ++c) {
      if (c == col) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return out;
}

// Fraction-free (Bareiss) elimination with row pivoting.
mpz_class det_int(IntMatrix a);

// Rows are scaled to integers by their denominator lcm, then det_int.
mpq_class det_rat(const RatMatrix& a);

/// Determinant of a matrix whose entries have degree <= 1. The result has
/// degree <= s, so it is recovered by interpolating exact integer
/// determinants at t = 0, 1, ..., s. Throws NonIntegerInterpolation if the
/// interpolated coefficients are not integers.
IntPolynomial det_poly(const PolyMatrix& a);

IntMatrix evaluate_at(const PolyMatrix& a, const mpz_class& t);

RealMatrix to_real(const IntMatrix& a);
RealMatrix to_real(const RatMatrix& a);

inline constexpr double kDefaultEigenTolerance = 1e-12;

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol (scaled by the matrix norm when that exceeds 1). Descending order.
std::vector<double> sym_eigenvalues(const RealMatrix& a, double tol = kDefaultEigenTolerance);
std::vector<double> sym_eigenvalues(const IntMatrix& a, double tol = kDefaultEigenTolerance);
std::vector<double> sym_eigenvalues(const RatMatrix& a, double tol = kDefaultEigenTolerance);

}  // namespace treecount
