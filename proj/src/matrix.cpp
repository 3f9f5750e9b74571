#include "floercas/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace floercas {

Matrix Matrix::identity(std::size_t n) { return scalar(n, GaussianRational(1)); }

Matrix Matrix::scalar(std::size_t n, const GaussianRational& c) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = c;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_scalar(const GaussianRational& c) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!((*this)(r, k) == (r == k ? c : GaussianRational()))) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const auto& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(r, k).is_zero()) out[r] += (*this)(r, k) * v[k];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

Matrix Matrix::scaled(const GaussianRational& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

Matrix Matrix::pow(unsigned n) const {
  if (!is_square()) throw std::invalid_argument("matrix power of non-square matrix");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::linear(const GaussianRational& root) { return UniPoly({-root, GaussianRational(1)}); }

UniPoly UniPoly::constant(const GaussianRational& c) { return UniPoly({c}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UniPoly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

bool UniPoly::divide_root(const GaussianRational& root) {
  if (c_.size() < 2) return false;
  // Synthetic division, high degree first.
  const std::size_t n = c_.size() - 1;
  std::vector<GaussianRational> q(n);
  GaussianRational carry = c_[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = c_[k] + carry * root;
  }
  if (!carry.is_zero()) return false;
  c_ = std::move(q);
  trim();
  return true;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const auto& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string body;
    if (k == 0)
      body = compound ? "(" + cs + ")" : cs;
    else if (c.is_one())
      body = mono;
    else if (c == GaussianRational(-1))
      body = "-" + mono;
    else
      body = (compound ? "(" + cs + ")" : cs) + mono;
    if (out.empty())
      out = body;
    else if (body[0] == '-')
      out += " - " + body.substr(1);
    else
      out += " + " + body;
  }
  return out;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const GaussianRational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rref = std::move(m);
  return e;
}

KernelRank kernel_rank(const Matrix& m) {
  Echelon e = row_reduce(m);
  KernelRank out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = GaussianRational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, free);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return row_reduce(Matrix::from_columns(vectors, dim)).pivots.size();
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& basis, const Vector& target) {
  const std::size_t n = target.size();
  const std::size_t k = basis.size();
  Matrix aug(n, k + 1);
  for (std::size_t c = 0; c < k; ++c) aug.set_column(c, basis[c]);
  aug.set_column(k, target);
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (e.pivots.size() != k) throw std::invalid_argument("solve_in_span: basis is linearly dependent");
  Vector coords(k);
  for (std::size_t r = 0; r < k; ++r) coords[e.pivots[r]] = e.rref(r, k);
  return coords;
}

UniPoly char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  // Coefficients high degree first; the empty matrix has characteristic polynomial 1.
  std::vector<GaussianRational> poly{GaussianRational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a, -R S, -R M S, ..., -R M^{k-1} S for the
    // bordered principal submatrix [[M, S], [R, a]].
    std::vector<GaussianRational> col(k + 2);
    col[0] = GaussianRational(1);
    col[1] = -m(k, k);
    Vector s(k);
    for (std::size_t r = 0; r < k; ++r) s[r] = m(r, k);
    for (std::size_t p = 0; p < k; ++p) {
      GaussianRational rs;
      for (std::size_t c = 0; c < k; ++c)
        if (!s[c].is_zero()) rs += m(k, c) * s[c];
      col[p + 2] = -rs;
      if (p + 1 < k) {
        Vector next(k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c)
            if (!s[c].is_zero() && !m(r, c).is_zero()) next[r] += m(r, c) * s[c];
        s = std::move(next);
      }
    }
    std::vector<GaussianRational> next_poly(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) next_poly[i] += col[i - j] * poly[j];
    poly = std::move(next_poly);
  }
  std::vector<GaussianRational> low_first(poly.rbegin(), poly.rend());
  return UniPoly(std::move(low_first));
}

}  // namespace floercas
