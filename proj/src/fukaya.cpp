#include "floercas/fukaya.hpp"

#include <sstream>
#include <stdexcept>

namespace floercas {

namespace {

void require_genus(int g, const char* what) {
  if (g < 1) throw std::invalid_argument(std::string(what) + ": genus must be at least 1");
}

TruncatedSeries linear_series(const GaussianRational& c0, const GaussianRational& c1, std::size_t order) {
  return TruncatedSeries::constant(c0, order) + TruncatedSeries::monomial(c1, 1, order);
}

}  // namespace

RhffModule rhff(int g, int n, std::size_t order) {
  require_genus(g, "rhff");
  RhffModule m;
  m.genus = g;
  m.n = n;
  for (int i = -(g - 1); i <= g - 1; ++i) {
    const auto [a0, b] = lattice_eigenpair(i);
    const long slope = (i % 2 == 0) ? -2L * n : 2L * n;
    m.components.push_back({i, linear_series(a0, GaussianRational(slope), order), b});
  }
  return m;
}

std::string rhff_mismatch(int g, int n) {
  const RhffModule mod = rhff(g, n, 1);
  const QuotientRing q = reduced_quotient(g);
  std::ostringstream why;
  if (q.dim() != mod.components.size()) {
    why << "dim F_" << g << "/(gamma, beta^2-64) = " << q.dim() << ", expected " << mod.components.size();
    return why.str();
  }
  UniPoly expected = UniPoly::constant(GaussianRational(1));
  for (const auto& c : mod.components) expected = expected * UniPoly::linear(c.alpha.constant_term());
  const Matrix& ma = q.mult_matrix(Var::A);
  const Matrix& mb = q.mult_matrix(Var::B);
  if (char_poly(ma) != expected) {
    why << "alpha characteristic polynomial " << char_poly(ma).to_string() << " differs from "
        << expected.to_string();
    return why.str();
  }
  const Matrix b2 = mb * mb - Matrix::scalar(q.dim(), GaussianRational(64));
  if (!b2.is_zero()) return "beta^2 - 64 does not vanish";
  for (const auto& c : mod.components) {
    const auto ker = kernel_rank(ma - Matrix::scalar(q.dim(), c.alpha.constant_term())).kernel_basis;
    if (ker.size() != 1) {
      why << "alpha eigenspace for " << c.alpha.constant_term() << " has dimension " << ker.size();
      return why.str();
    }
    Vector bv = mb * ker[0];
    for (std::size_t k = 0; k < bv.size(); ++k) {
      if (bv[k] != c.beta * ker[0][k]) {
        why << "beta does not act as " << c.beta << " on the alpha = " << c.alpha.constant_term() << " line";
        return why.str();
      }
    }
  }
  return {};
}

std::vector<EffectiveEigenvalue> effective_eigenvalues(int g, std::size_t order) {
  require_genus(g, "effective_eigenvalues");
  std::vector<EffectiveEigenvalue> out;
  out.push_back({linear_series(GaussianRational(0), GaussianRational(-2), order), GaussianRational(8),
                 GaussianRational(0)});
  for (int j = 1; j <= g - 1; ++j) {
    for (int s : {1, -1}) {
      const auto [a0, b] = lattice_eigenpair(s * j);
      const GaussianRational slope(j % 2 == 0 ? -2 : 2);
      out.push_back({linear_series(a0, slope, order), b, GaussianRational(0)});
    }
  }
  return out;
}

long DeltaHffModule::total_rank() const {
  long t = 0;
  for (const auto& c : components) t += c.multiplicity;
  return t;
}

DeltaHffModule delta_hff(int g) {
  require_genus(g, "delta_hff");
  DeltaHffModule m;
  m.genus = g;
  for (int k = 0; k <= g - 1; ++k) {
    const int top = g - k - 1;
    const long mult = binomial(2L * g - 2, k) - binomial(2L * g - 2, k - 2);
    for (int i = -top; i <= top; i += 2) {
      const auto [a, b] = lattice_eigenpair(i);
      m.components.push_back({k, i, mult, a, b});
    }
  }
  return m;
}

YHomologyClass YHomologyClass::zero(int g, int grade) {
  if (grade < 0 || grade > 2) throw std::invalid_argument("homology grade must be 0, 1 or 2");
  YHomologyClass c;
  c.grade = grade;
  c.torus_coeffs.assign(2 * static_cast<std::size_t>(g), 0);
  c.surface_coeffs.assign(2 * static_cast<std::size_t>(g), 0);
  return c;
}

YHomologyClass YHomologyClass::operator+(const YHomologyClass& o) const {
  if (grade != o.grade || torus_coeffs.size() != o.torus_coeffs.size())
    throw std::invalid_argument("adding homology classes of different grade or genus");
  YHomologyClass r = *this;
  r.sigma_coeff += o.sigma_coeff;
  r.circle_coeff += o.circle_coeff;
  r.point_mult += o.point_mult;
  for (std::size_t j = 0; j < torus_coeffs.size(); ++j) {
    r.torus_coeffs[j] += o.torus_coeffs[j];
    r.surface_coeffs[j] += o.surface_coeffs[j];
  }
  return r;
}

YHomologyClass YHomologyClass::scaled(long c) const {
  YHomologyClass r = *this;
  r.sigma_coeff *= c;
  r.circle_coeff *= c;
  r.point_mult *= c;
  for (auto& x : r.torus_coeffs) x *= c;
  for (auto& x : r.surface_coeffs) x *= c;
  return r;
}

long pairing_with_circle(const YHomologyClass& a) { return a.grade == 2 ? a.sigma_coeff : 0; }

long pairing_with_delta(const YHomologyClass& a, int g) {
  if (a.grade != 2) return 0;
  if (a.torus_coeffs.size() != 2 * static_cast<std::size_t>(g))
    throw std::invalid_argument("torus coefficient vector must have length 2g");
  // gamma_j . gamma_1 is nonzero only for j = g+1, where gamma_{g+1} gamma_1 = -pt.
  return -a.torus_coeffs[static_cast<std::size_t>(g)];
}

TruncatedSeries mu_action(int i, const YHomologyClass& a, int g, std::size_t order) {
  require_genus(g, "mu_action");
  switch (a.grade) {
    case 0:
      return TruncatedSeries::constant(GaussianRational((i % 2 == 0 ? 8 : -8) * a.point_mult), order);
    case 1:
      return TruncatedSeries(order);
    case 2: {
      const long s = pairing_with_circle(a);
      const long d = pairing_with_delta(a, g);
      if (i % 2 == 0)
        return linear_series(GaussianRational(Rational(0), Rational(4L * s * i)), GaussianRational(-2 * d), order);
      return linear_series(GaussianRational(4L * s * i), GaussianRational(2 * d), order);
    }
    default:
      throw std::invalid_argument("homology grade must be 0, 1 or 2");
  }
}

}  // namespace floercas
