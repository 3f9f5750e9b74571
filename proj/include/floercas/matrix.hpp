#pragma once

#include "floercas/gaussian_rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace floercas {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(sqrt(-1)).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const GaussianRational& c);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  bool is_scalar(const GaussianRational& c) const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const GaussianRational& c) const;
  Matrix pow(unsigned n) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Univariate polynomial, coefficients low degree first, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs);

  /// x - root.
  static UniPoly linear(const GaussianRational& root);
  static UniPoly constant(const GaussianRational& c);

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  GaussianRational eval(const GaussianRational& x) const;

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Divides by (x - root) if it is a root; returns false otherwise.
  bool divide_root(const GaussianRational& root);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Reduced row-echelon form with pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);

struct KernelRank {
  std::size_t rank = 0;
  std::vector<Vector> kernel_basis;
};

/// Exact rank and a kernel basis (one vector per free column).
KernelRank kernel_rank(const Matrix& m);

/// Rank of the span of the given vectors.
std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim);

/// Coordinates c with sum_k c_k * basis[k] == target, or nullopt when the
/// target is not in the span. basis must be linearly independent.
std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& target);

/// det(x I - m) by the division-free Berkowitz recurrence.
UniPoly char_poly(const Matrix& m);

}  // namespace floercas
