#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercas/floer.hpp"
#include "floercas/groebner.hpp"

#include <random>

using namespace floercas;

namespace {

const Poly a = poly_var(Var::A);
const Poly b = poly_var(Var::B);
const Poly c = poly_var(Var::C);
Poly k(long x) { return poly_constant(GaussianRational(x)); }

std::vector<Poly> j2() { return {a * a + b - k(8), a * b + a.scaled(GaussianRational(8)) + c, a * c}; }

Poly s_poly(const Poly& f, const Poly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.shifted(f.leading_monomial().quotient_of(l)).scaled(f.leading_coeff().inverse()) -
         g.shifted(g.leading_monomial().quotient_of(l)).scaled(g.leading_coeff().inverse());
}

GaussianRational gq(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

}  // namespace

TEST_CASE("buchberger on small ideals") {
  const auto lin = buchberger({a, b - k(8), c});
  CHECK(lin.generators.size() == 3);
  CHECK(staircase_basis(lin) == std::vector<Monomial>{Monomial{}});

  const auto unit = buchberger({k(1)});
  CHECK(unit.is_unit_ideal());
  CHECK(staircase_basis(unit).empty());

  const auto gb = buchberger(j2());
  CHECK(staircase_basis(gb).size() == 4);
}

TEST_CASE("groebner basis is reduced and closed under S-pairs") {
  for (int r = 1; r <= 4; ++r) {
    for (const auto& ord : {MonomialOrder::grlex(), MonomialOrder::grevlex(), MonomialOrder::weighted_grevlex()}) {
      const auto gb = buchberger(relations(Flavor::Floer, r, ord).generators(), ord);
      for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        CHECK(gb.generators[i].leading_coeff().is_one());
        for (std::size_t j = 0; j < gb.generators.size(); ++j) {
          if (i != j) {
            for (const auto& [m, coeff] : gb.generators[j].terms())
              CHECK_FALSE(gb.generators[i].leading_monomial().divides(m));
          }
          if (i < j) CHECK(normal_form(s_poly(gb.generators[i], gb.generators[j]), gb).is_zero());
        }
      }
    }
  }
}

TEST_CASE("normal forms in F_2") {
  const auto gb = buchberger(j2());
  CHECK(normal_form(k(1), gb) == k(1));
  CHECK(normal_form(a * a, gb) == k(8) - b);
  CHECK(normal_form(a * c, gb).is_zero());
}

TEST_CASE("staircases") {
  CHECK(staircase_basis(buchberger(j2())) ==
        std::vector<Monomial>{Monomial{}, Monomial::var(Var::A), Monomial::var(Var::B), Monomial::var(Var::C)});
  try {
    staircase_basis(buchberger({a * a, b}));
    FAIL("expected an infinite quotient");
  } catch (const InfiniteQuotientError& e) {
    CHECK(e.witness_var() == 2);
  }
}

TEST_CASE("multiplication matrices") {
  const QuotientRing f1 = QuotientRing::from_generators({a, b - k(8), c});
  CHECK(f1.mult_matrix(Var::A).is_zero());
  CHECK(f1.mult_matrix(Var::B).is_scalar(gq(8)));

  const QuotientRing f2 = QuotientRing::from_generators(j2());
  // basis {1, alpha, beta, gamma}
  const Matrix& mc = f2.mult_matrix(Var::C);
  CHECK(mc.column(0) == Vector{0, 0, 0, 1});
  const Matrix& ma = f2.mult_matrix(Var::A);
  CHECK(ma.column(1) == Vector{8, 0, -1, 0});
}

TEST_CASE("characteristic polynomials and factoring") {
  CHECK(char_poly(Matrix::identity(2)) == UniPoly::linear(1) * UniPoly::linear(1));

  const QuotientRing fb2 = build_Fbar(2);
  CHECK(char_poly(fb2.mult_matrix(Var::A)) == UniPoly({0, -16, 0, 1}));
  CHECK(char_poly(build_F(2).mult_matrix(Var::C)) == UniPoly({0, 0, 0, 0, 1}));

  const auto rep = factor_over_candidates(UniPoly({0, -16, 0, 1}), {0, 4, -4});
  CHECK(rep.fully_factored());
  CHECK(rep.roots.size() == 3);
  const auto twice = factor_over_candidates(UniPoly::linear(1) * UniPoly::linear(1), {1});
  CHECK(twice.multiplicity(1) == 2);
  const auto pm = factor_over_candidates(UniPoly({64, 0, 1}), {gq(0, 8), gq(0, -8)});
  CHECK(pm.fully_factored());
  const auto partial = factor_over_candidates(UniPoly({-2, 0, 1}), {1, -1});
  CHECK_FALSE(partial.fully_factored());
  CHECK(partial.remainder == UniPoly({-2, 0, 1}));
  CHECK_THROWS_AS(factor_over_candidates(UniPoly({1, 2}), {}), std::invalid_argument);
}

TEST_CASE("kernel and rank") {
  const auto id = kernel_rank(Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel_basis.empty());
  const auto z = kernel_rank(Matrix(3, 3));
  CHECK(z.rank == 0);
  CHECK(z.kernel_basis.size() == 3);
  CHECK(kernel_rank(build_F(2).mult_matrix(Var::C)).kernel_basis.size() == 3);
}

TEST_CASE("ring invariants on small quotients") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<unsigned> ex(0, 3);
  std::uniform_int_distribution<long> co(-4, 4);
  auto rand_poly = [&]() {
    Poly p;
    for (int t = 0; t < 4; ++t) p.add_term(Monomial{{ex(rng), ex(rng), ex(rng)}}, GaussianRational(co(rng)));
    return p;
  };
  for (int r = 1; r <= 4; ++r) {
    const QuotientRing f = build_F(r);
    const auto& ma = f.mult_matrix(Var::A);
    const auto& mb = f.mult_matrix(Var::B);
    const auto& mc = f.mult_matrix(Var::C);
    CHECK(ma * mb == mb * ma);
    CHECK(ma * mc == mc * ma);
    CHECK(mb * mc == mc * mb);

    std::vector<Vector> cols;
    for (const auto& m : f.basis()) cols.push_back(f.coordinates(Poly::term(m, GaussianRational(1))));
    CHECK(span_rank(cols, f.dim()) == f.dim());

    for (int t = 0; t < 5; ++t) {
      const Poly p = rand_poly();
      const Poly q = rand_poly();
      CHECK(f.reduce(p * q) == f.reduce(f.reduce(p) * f.reduce(q)));
    }
  }
}

TEST_CASE("spectra do not depend on the monomial order") {
  for (int r = 1; r <= 4; ++r) {
    const QuotientRing g1 = build_F(r, MonomialOrder::grlex());
    const QuotientRing g2 = build_F(r, MonomialOrder::weighted_grevlex());
    CHECK(g1.dim() == g2.dim());
    for (int v = 0; v < kNumVars; ++v)
      CHECK(char_poly(g1.mult_matrix(static_cast<Var>(v))) == char_poly(g2.mult_matrix(static_cast<Var>(v))));
  }
}

TEST_CASE("spectrum candidates") {
  const auto cands = spectrum_candidates(1);
  CHECK(cands.size() == 7);  // 0, +-4, +-4i, +-8
  CHECK(std::is_sorted(cands.begin(), cands.end()));
}
