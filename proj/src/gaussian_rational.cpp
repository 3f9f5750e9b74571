#include "floercas/gaussian_rational.hpp"

#include <sstream>

namespace floercas {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in Q(sqrt(-1))");
  Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

std::optional<GaussianRational> GaussianRational::try_inverse() const {
  if (is_zero()) return std::nullopt;
  return inverse();
}

GaussianRational GaussianRational::pow(unsigned n) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string out;
  if (has_re) out = re_.get_str();
  Rational mag = abs(im_);
  if (sgn(im_) < 0)
    out += "-";
  else if (has_re)
    out += "+";
  if (mag != 1) out += mag.get_str();
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational: " + s);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw std::invalid_argument("malformed rational: " + s);
  std::string body = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  q.set_str(body, 10);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace floercas
