#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercas/floer.hpp"

#include <algorithm>

using namespace floercas;

namespace {

const Poly a = poly_var(Var::A);
const Poly b = poly_var(Var::B);
const Poly c = poly_var(Var::C);
Poly k(long x) { return poly_constant(GaussianRational(x)); }

GaussianRational gq(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

std::vector<GaussianRational> roots(const EigenReport& e) {
  auto v = e.multiset();
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<GaussianRational> sorted(std::vector<GaussianRational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("relation recursions") {
  const auto r0 = relations(Flavor::Floer, 0);
  CHECK(r0.p[0] == k(1));
  CHECK(r0.p[1].is_zero());
  CHECK(r0.p[2].is_zero());

  const auto r1 = relations(Flavor::Floer, 1);
  CHECK(r1.p[0] == a);
  CHECK(r1.p[1] == b - k(8));
  CHECK(r1.p[2] == c);

  const auto r2 = relations(Flavor::Floer, 2);
  CHECK(r2.p[0] == a * a + b - k(8));
  CHECK(r2.p[1] == a * b + a.scaled(8) + c);
  CHECK(r2.p[2] == a * c);

  const auto q2 = relations(Flavor::Classical, 2);
  CHECK(q2.p[0] == a * a + b);
  CHECK(q2.p[1] == a * b + c);
  CHECK(q2.p[2] == a * c);

  const auto rb2 = relations(Flavor::Reduced, 2);
  CHECK(rb2.p[0] == a * a + b - k(8));
  CHECK(rb2.p[1] == a * b + a.scaled(8));
  CHECK(rb2.p[2].is_zero());

  CHECK(parse_flavor("Rbar") == Flavor::Reduced);
  CHECK_THROWS_AS(parse_flavor("S"), std::invalid_argument);
}

TEST_CASE("leading monomials of the relations") {
  for (int r = 1; r <= 6; ++r) {
    const auto t = relations(Flavor::Floer, r);
    const unsigned e = static_cast<unsigned>(r - 1);
    CHECK(t.p[0].leading_monomial() == Monomial{{e + 1, 0, 0}});
    CHECK(t.p[1].leading_monomial() == Monomial{{e, 1, 0}});
    CHECK(t.p[2].leading_monomial() == Monomial{{e, 0, 1}});
  }
}

TEST_CASE("small rings") {
  const QuotientRing f1 = build_F(1);
  CHECK(f1.dim() == 1);
  CHECK(f1.mult_matrix(Var::A).is_zero());
  CHECK(f1.mult_matrix(Var::B).is_scalar(8));
  CHECK(f1.mult_matrix(Var::C).is_zero());
  CHECK(build_F(2).dim() == 4);
  CHECK(build_F(3).dim() == 10);
  CHECK(build_Fbar(2).dim() == 3);
  CHECK(build_F(0).dim() == 0);
  CHECK(build_classical(3).dim() == 10);
}

TEST_CASE("dimension formulas and bases") {
  for (int r = 1; r <= 5; ++r) {
    CHECK(static_cast<long>(build_F(r).dim()) == binomial(r + 2, 3));
    CHECK(static_cast<long>(build_Fbar(r).dim()) == binomial(r + 1, 2));
    CHECK(is_exact_basis(build_F(r), expected_basis_monomials(r, true)));
  }
}

TEST_CASE("filtration steps") {
  const auto s0 = filtration_step(0);
  CHECK(s0.dim() == 1);
  CHECK(roots(s0.eigen_of(Var::A)) == std::vector<GaussianRational>{0});

  const auto s1 = filtration_step(1);
  CHECK(s1.dim() == 2);
  CHECK(roots(s1.eigen_of(Var::A)) == sorted({4, -4}));
  CHECK(roots(s1.eigen_of(Var::B)) == std::vector<GaussianRational>{-8, -8});

  const auto s2 = filtration_step(2);
  CHECK(s2.dim() == 3);
  CHECK(roots(s2.eigen_of(Var::A)) == sorted({0, gq(0, 8), gq(0, -8)}));
  CHECK(roots(s2.eigen_of(Var::B)) == std::vector<GaussianRational>{8, 8, 8});
}

TEST_CASE("the modules K_r") {
  const auto k1 = build_K(1);
  CHECK(k1.dim() == 1);
  CHECK(k1.action_of(Var::A).is_zero());
  CHECK(k1.action_of(Var::B).is_scalar(8));
  CHECK(k1.action_of(Var::C).is_zero());

  const auto k2 = build_K(2);
  CHECK(k2.dim() == 2);
  CHECK(roots(k2.eigen_of(Var::A)) == sorted({4, -4}));
  CHECK(roots(k2.eigen_of(Var::B)) == std::vector<GaussianRational>{-8, -8});

  const auto k3 = build_K(3);
  CHECK(roots(k3.eigen_of(Var::A)) == sorted({0, gq(0, 8), gq(0, -8)}));
  CHECK(roots(k3.eigen_of(Var::B)) == std::vector<GaussianRational>{8, 8, 8});

  for (int r = 1; r <= 4; ++r) CHECK(build_K_via_kernels(r).dim() == static_cast<std::size_t>(r));
  CHECK_THROWS_AS(build_K(0), std::invalid_argument);
}

TEST_CASE("subquotient construction rejects bad input") {
  const QuotientRing f2 = build_F(2);
  // numerator span{gamma} does not contain the denominator span{1}
  const Vector one = f2.coordinates(k(1));
  const Vector gam = f2.coordinates(c);
  CHECK_THROWS_AS(make_subquotient(f2, {gam}, {one}, 2, "bad"), FalsificationError);
  // span{1} alone is not an ideal
  CHECK_THROWS_AS(make_subquotient(f2, {one}, {}, 2, "not stable"), FalsificationError);
}

TEST_CASE("sign-twisted quotients") {
  for (int r = 1; r <= 4; ++r)
    CHECK(char_poly(filtration_quotient(r).mult_matrix(Var::A)) == filtration_quotient_charpoly(r));
  CHECK(filtration_quotient_charpoly(1) == UniPoly({-16, 0, 1}));
  CHECK(filtration_quotient_charpoly(2) == UniPoly({0, 64, 0, 1}));
}

TEST_CASE("primitive dimensions") {
  CHECK(primitive_dim(3, 0) == 1);
  CHECK(primitive_dim(2, 1) == 4);
  CHECK(primitive_dim(3, 2) == 14);
  for (int g = 1; g <= 3; ++g)
    for (int kk = 0; kk <= g; ++kk) CHECK(primitive_dim_exact(g, kk) == primitive_dim(g, kk));
  CHECK_THROWS_AS(primitive_dim(2, 3), std::invalid_argument);
}

TEST_CASE("assembled Floer rings") {
  CHECK(hf_assemble(1).total_dim == 1);
  CHECK(hf_assemble(2).total_dim == 8);
  CHECK(hf_assemble(3).total_dim == 48);
  const FloerRing hf = hf_assemble(3);
  CHECK(hf.summands.back().ring.dim() == 0);
  CHECK(hf_assemble(3, true).total_dim == 10);
}

TEST_CASE("gamma kernels") {
  CHECK(gamma_kernel_dims(1) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(gamma_kernel_dims(2) == std::pair<std::size_t, std::size_t>{3, 4});
  CHECK(gamma_kernel_dims(3) == std::pair<std::size_t, std::size_t>{6, 9});
}

TEST_CASE("psi_1 homology") {
  CHECK(psi1_homology_total(psi1_homology_dims(1)) == 1);
  const auto g2 = psi1_homology_dims(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].multiplicity == 1);
  CHECK(g2[0].dim_K == 2);
  CHECK(g2[1].multiplicity == 2);
  CHECK(g2[1].dim_K == 1);
  CHECK(psi1_homology_total(g2) == 4);
  CHECK(psi1_homology_total(psi1_homology_dims(3)) == 16);
}

TEST_CASE("gamma shifts ideals and is nilpotent") {
  for (int r = 1; r <= 4; ++r) {
    const QuotientRing f = build_F(r);
    for (const auto& p : relations(Flavor::Floer, r - 1).p)
      if (!p.is_zero()) CHECK(f.reduce(c * p).is_zero());
    CHECK(f.mult_matrix(Var::C).pow(static_cast<unsigned>(r)).is_zero());
  }
}
