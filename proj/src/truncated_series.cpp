#include "floercas/truncated_series.hpp"

namespace floercas {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw ArithmeticError("truncation order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<GaussianRational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  if (order == 0) throw ArithmeticError("truncation order must be positive");
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::constant(const GaussianRational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const GaussianRational& c, std::size_t k, std::size_t order) {
  TruncatedSeries s(order);
  if (k < order) s.coeffs_[k] = c;
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool TruncatedSeries::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return k;
  return coeffs_.size();
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o, const char* what) const {
  if (o.order() != order())
    throw ArithmeticError(std::string(what) + ": mismatched truncation orders " +
                          std::to_string(order()) + " and " + std::to_string(o.order()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(o, "series addition");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(o, "series subtraction");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  require_same_order(o, "series product");
  const std::size_t n = coeffs_.size();
  std::vector<GaussianRational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const GaussianRational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw ArithmeticError("series inverse requires a unit constant term");
  const std::size_t n = coeffs_.size();
  const GaussianRational c0inv = coeffs_[0].inverse();
  std::vector<GaussianRational> out(n);
  out[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    GaussianRational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out[k - j];
    out[k] = -acc * c0inv;
  }
  return {std::move(out), n};
}

TruncatedSeries TruncatedSeries::scale_variable(const GaussianRational& c) const {
  TruncatedSeries r = *this;
  GaussianRational p(1);
  for (auto& x : r.coeffs_) {
    x *= p;
    p *= c;
  }
  return r;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body;
    std::string cs = c.to_string();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (k == 0) {
      body = compound ? "(" + cs + ")" : cs;
    } else {
      std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (c.is_one())
        body = mono;
      else if (c == GaussianRational(-1))
        body = "-" + mono;
      else
        body = (compound ? "(" + cs + ")" : cs) + mono;
    }
    if (out.empty())
      out = body;
    else if (body[0] == '-')
      out += " - " + body.substr(1);
    else
      out += " + " + body;
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y) { return x * y; }

TruncatedSeries series_exp(const TruncatedSeries& x) {
  if (!x.constant_term().is_zero())
    throw ArithmeticError("series_exp requires a zero constant term");
  // e' = x' e, solved coefficientwise: k e_k = sum_{j=1..k} j x_j e_{k-j}.
  const std::size_t n = x.order();
  std::vector<GaussianRational> e(n);
  e[0] = GaussianRational(1);
  for (std::size_t k = 1; k < n; ++k) {
    GaussianRational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (x[j].is_zero()) continue;
      acc += GaussianRational(static_cast<long>(j)) * x[j] * e[k - j];
    }
    e[k] = acc * GaussianRational(Rational(1, static_cast<unsigned long>(k)));
  }
  return {std::move(e), n};
}

TruncatedSeries exp_linear(const GaussianRational& c, std::size_t order) {
  std::vector<GaussianRational> e(order);
  e[0] = GaussianRational(1);
  for (std::size_t k = 1; k < order; ++k)
    e[k] = e[k - 1] * c * GaussianRational(Rational(1, static_cast<unsigned long>(k)));
  return {std::move(e), order};
}

}  // namespace floercas
