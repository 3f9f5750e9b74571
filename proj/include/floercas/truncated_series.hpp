#pragma once

#include "floercas/gaussian_rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace floercas {

inline constexpr std::size_t kDefaultTruncation = 16;

/// Element of Q(sqrt(-1))[t] / (t^N).
///
/// The formal variable t has cohomological degree -2. All binary operations
/// require both operands to share the same order N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = kDefaultTruncation);
  TruncatedSeries(std::vector<GaussianRational> coeffs, std::size_t order);

  static TruncatedSeries constant(const GaussianRational& c, std::size_t order = kDefaultTruncation);
  /// c * t^k (zero when k >= order).
  static TruncatedSeries monomial(const GaussianRational& c, std::size_t k,
                                  std::size_t order = kDefaultTruncation);

  std::size_t order() const { return coeffs_.size(); }
  const GaussianRational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// Index of the first nonzero coefficient, or order() if zero.
  std::size_t valuation() const;

  /// Value at t = 0.
  const GaussianRational& constant_term() const { return coeffs_[0]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const GaussianRational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const GaussianRational& c) { return a *= c; }
  friend TruncatedSeries operator*(const GaussianRational& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator-(const TruncatedSeries& a);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; requires a unit constant term.
  TruncatedSeries inverse() const;

  /// Substitutes t -> c*t.
  TruncatedSeries scale_variable(const GaussianRational& c) const;

  /// "1 + 2t - 4/3t^3"; "0" for the zero series.
  std::string to_string(const std::string& var = "t") const;

 private:
  void require_same_order(const TruncatedSeries& o, const char* what) const;

  std::vector<GaussianRational> coeffs_;
};

/// Cauchy product truncated at t^N. Throws ArithmeticError on mismatched orders.
TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y);

/// sum_k x^k / k!. Throws ArithmeticError when x has a nonzero constant term.
TruncatedSeries series_exp(const TruncatedSeries& x);

/// e^{c t} truncated at t^N; coefficient of t^k is c^k/k!.
TruncatedSeries exp_linear(const GaussianRational& c, std::size_t order);

}  // namespace floercas
