#include "floercas/donaldson.hpp"

#include <stdexcept>

namespace floercas {

namespace {

const IntMatrix kHyperbolic = {{0, 1}, {1, 0}};

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
  r.canonicalize();
  return r;
}

DonaldsonSeries empty_product_lattice() {
  DonaldsonSeries s;
  s.basis_names = {"E", "F"};
  s.Q = kHyperbolic;
  return s;
}

IntVector neg(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Q x.
IntVector apply(const IntMatrix& Q, const IntVector& x) {
  IntVector out(Q.size(), 0);
  for (std::size_t i = 0; i < Q.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += Q[i][j] * x[j];
  return out;
}

// P^T y.
IntVector apply_transpose(const IntMatrix& P, const IntVector& y) {
  const std::size_t cols = P.empty() ? 0 : P[0].size();
  IntVector out(cols, 0);
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j] += P[i][j] * y[i];
  return out;
}

// Solves Q x = y over the integers; throws when Q is singular or x is not integral.
IntVector solve_integral(const IntMatrix& Q, const IntVector& y) {
  const std::size_t n = Q.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(Q[i][j]));
    m[i][n] = Rational(static_cast<long>(y[i]));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("intersection form of the glued lattice is degenerate");
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = m[i][n] / m[i][i];
    v.canonicalize();
    if (v.get_den() != 1) throw std::invalid_argument("glued basic class is not integral");
    x[i] = v.get_num().get_si();
  }
  return x;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
  const std::size_t n = A.size();
  const std::size_t k = B.size();
  const std::size_t m = B.empty() ? 0 : B[0].size();
  IntMatrix C(n, IntVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
  return C;
}

IntMatrix transpose(const IntMatrix& A) {
  const std::size_t n = A.size();
  const std::size_t m = A.empty() ? 0 : A[0].size();
  IntMatrix T(m, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) T[j][i] = A[i][j];
  return T;
}

void require_shape(const IntMatrix& P, std::size_t rows, std::size_t cols, const char* what) {
  if (P.size() != rows) throw std::invalid_argument(std::string(what) + " has the wrong number of rows");
  for (const auto& row : P)
    if (row.size() != cols) throw std::invalid_argument(std::string(what) + " has the wrong number of columns");
}

}  // namespace

void DonaldsonSeries::add_term(const IntVector& K, const Rational& a) {
  if (K.size() != rank()) throw std::invalid_argument("basic class has the wrong length");
  auto [it, inserted] = terms.try_emplace(K, a);
  if (!inserted) it->second += a;
  if (it->second == 0) terms.erase(it);
}

std::int64_t DonaldsonSeries::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw std::invalid_argument("class has the wrong length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * Q[i][j] * y[j];
  return s;
}

void DonaldsonSeries::validate() const {
  require_shape(Q, rank(), rank(), "intersection form");
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (Q[i][j] != Q[j][i]) throw std::invalid_argument("intersection form is not symmetric");
  for (const auto& [K, a] : terms) {
    if (K.size() != rank()) throw std::invalid_argument("basic class has the wrong length");
    if (a == 0) throw std::invalid_argument("zero coefficient stored");
  }
}

bool DonaldsonSeries::same_lattice(const DonaldsonSeries& o) const {
  return basis_names == o.basis_names && Q == o.Q;
}

DonaldsonSeries product_series(int g, int h) {
  if (g < 1 || h < 1) throw std::invalid_argument("product_series: genera must be at least 1");
  if (g < h) std::swap(g, h);
  DonaldsonSeries s = empty_product_lattice();
  if (h == 1) {
    // 4^g sinh^{2g-2} F = 4^g 2^{-(2g-2)} sum_m C(2g-2, m) (-1)^m e^{(2g-2-2m) F}
    const long n = 2L * g - 2;
    const Rational scale = pow2(2L * g - n);
    for (long m = 0; m <= n; ++m) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
      Rational a = scale * Rational(c);
      if (m % 2) a = -a;
      s.add_term({0, n - 2 * m}, a);
    }
    return s;
  }
  const Rational half = pow2(7L * (g - 1) * (h - 1) + 3 - 1);
  const IntVector K = {2L * h - 2, 2L * g - 2};
  const bool both_even = g % 2 == 0 && h % 2 == 0;
  s.add_term(K, half);
  s.add_term(neg(K), both_even ? Rational(-half) : half);
  return s;
}

DonaldsonSeries swap_basis(const DonaldsonSeries& s) {
  if (s.rank() != 2) throw std::invalid_argument("swap_basis expects a rank 2 lattice");
  DonaldsonSeries out;
  out.basis_names = {s.basis_names[1], s.basis_names[0]};
  out.Q = {{s.Q[1][1], s.Q[1][0]}, {s.Q[0][1], s.Q[0][0]}};
  out.simple_type = s.simple_type;
  for (const auto& [K, a] : s.terms) out.add_term({K[1], K[0]}, a);
  return out;
}

DonaldsonSeries product_series_oriented(int g, int h) {
  return g >= h ? product_series(g, h) : swap_basis(product_series(g, h));
}

TruncatedSeries evaluate(const DonaldsonSeries& s, const IntVector& D, std::size_t order) {
  if (D.size() != s.rank()) throw std::invalid_argument("evaluation class has the wrong length");
  TruncatedSeries sum(order);
  for (const auto& [K, a] : s.terms)
    sum += exp_linear(GaussianRational(static_cast<long>(s.pair(K, D))), order) * GaussianRational(a);
  const Rational q(static_cast<long>(s.square(D)), 2);
  return sum * series_exp(TruncatedSeries::monomial(GaussianRational(q), 2, order));
}

void validate_fiber_input(const FiberSumInput& in) {
  if (in.genus < 1) throw std::invalid_argument("fiber sum genus must be at least 1");
  in.a.validate();
  in.b.validate();
  const std::size_t n = in.basis_names.size();
  require_shape(in.Q, n, n, "glued intersection form");
  require_shape(in.P1, in.a.rank(), n, "first split map");
  require_shape(in.P2, in.b.rank(), n, "second split map");
  if (in.sigma.size() != n || in.sigma_a.size() != in.a.rank() || in.sigma_b.size() != in.b.rank())
    throw std::invalid_argument("surface class has the wrong length");
  IntMatrix lhs = mat_mul(transpose(in.P1), mat_mul(in.a.Q, in.P1));
  const IntMatrix rhs2 = mat_mul(transpose(in.P2), mat_mul(in.b.Q, in.P2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lhs[i][j] += rhs2[i][j];
  if (lhs != in.Q) throw std::invalid_argument("split does not satisfy D^2 = D1^2 + D2^2");
  DonaldsonSeries glued;
  glued.basis_names = in.basis_names;
  glued.Q = in.Q;
  glued.validate();
  if (glued.square(in.sigma) != 0 || in.a.square(in.sigma_a) != 0 || in.b.square(in.sigma_b) != 0)
    throw std::invalid_argument("the gluing surface must have self-intersection zero");
}

DonaldsonSeries fiber_sum(const FiberSumInput& in) {
  validate_fiber_input(in);
  if (!in.a.simple_type || !in.b.simple_type) throw std::invalid_argument("fiber sum needs simple type inputs");
  const int g = in.genus;
  DonaldsonSeries out;
  out.basis_names = in.basis_names;
  out.Q = in.Q;

  // Glued class X with X . D = K . D1 + L . D2 for every D.
  auto glued_class = [&](const IntVector& K, const IntVector& L) {
    IntVector y = apply_transpose(in.P1, apply(in.a.Q, K));
    const IntVector y2 = apply_transpose(in.P2, apply(in.b.Q, L));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += y2[i];
    return solve_integral(in.Q, y);
  };
  auto shifted = [&](IntVector x, std::int64_t k) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += k * in.sigma[i];
    return x;
  };

  if (g == 1) {
    for (const auto& [K, a] : in.a.terms)
      for (const auto& [L, b] : in.b.terms) {
        const IntVector x = glued_class(K, L);
        const Rational ab = a * b;
        out.add_term(shifted(x, 2), ab / 4);
        out.add_term(x, -ab / 2);
        out.add_term(shifted(x, -2), ab / 4);
      }
    return out;
  }

  const std::int64_t top = 2L * g - 2;
  const Rational weight = pow2(7L * g - 9);
  const Rational minus_sign = (g % 2 == 0) ? Rational(-1) : Rational(1);
  for (const auto& [K, a] : in.a.terms) {
    const std::int64_t ks = in.a.pair(K, in.sigma_a);
    if (ks != top && ks != -top) continue;
    for (const auto& [L, b] : in.b.terms) {
      if (in.b.pair(L, in.sigma_b) != ks) continue;
      const IntVector x = glued_class(K, L);
      if (ks == top)
        out.add_term(shifted(x, 2), weight * a * b);
      else
        out.add_term(shifted(x, -2), minus_sign * weight * a * b);
    }
  }
  return out;
}

FiberSumInput glue_along_first(const DonaldsonSeries& a, const DonaldsonSeries& b, int g) {
  FiberSumInput in;
  in.a = a;
  in.b = b;
  in.genus = g;
  in.sigma_a = {1, 0};
  in.sigma_b = {1, 0};
  in.basis_names = {"E", "F"};
  in.Q = kHyperbolic;
  in.sigma = {1, 0};
  in.P1 = {{1, 0}, {0, 1}};
  in.P2 = {{0, 0}, {0, 1}};
  return in;
}

int finite_type_order(int g, bool b1_zero) {
  if (g < 0) throw std::invalid_argument("finite_type_order: genus must be non-negative");
  if (g == 0) return 0;
  if (b1_zero) return (2 * g - 2) / 4 + 1;
  int total = 0;
  for (int i = 1; i <= g; ++i) total += (2 * g - 2 * i) / 4 + 1;
  return total;
}

bool CongruenceReport::passed() const {
  for (const auto& v : verdicts)
    if (!v.ok) return false;
  return true;
}

CongruenceReport congruence_check(const DonaldsonSeries& s, const IntVector& sigma, int g) {
  CongruenceReport rep;
  rep.genus = g;
  rep.sigma = sigma;
  const std::int64_t target = ((2L * g - 2) % 4 + 4) % 4;
  for (const auto& [K, a] : s.terms) {
    CongruenceVerdict v;
    v.K = K;
    v.pairing = s.pair(K, sigma);
    v.ok = ((v.pairing % 4) + 4) % 4 == target;
    rep.verdicts.push_back(v);
  }
  return rep;
}

DonaldsonSeries w_sigma_combine(const DonaldsonSeries& a, const DonaldsonSeries& b) {
  if (!a.same_lattice(b)) throw std::invalid_argument("w_sigma_combine: series live on different lattices");
  DonaldsonSeries out = a;
  out.simple_type = a.simple_type && b.simple_type;
  for (const auto& [K, c] : b.terms) out.add_term(K, c);
  return out;
}

TruncatedSeries twisted_combination(const DonaldsonSeries& s, const IntVector& D, std::size_t order,
                                    long exponent, const Rational& normalization) {
  const TruncatedSeries plain = evaluate(s, D, order);
  const GaussianRational i = GaussianRational::i();
  const TruncatedSeries rotated = plain.scale_variable(i);
  const GaussianRational phase = i.pow(static_cast<unsigned>(((exponent % 4) + 4) % 4));
  return (plain + rotated * phase) * GaussianRational(normalization);
}

}  // namespace floercas
