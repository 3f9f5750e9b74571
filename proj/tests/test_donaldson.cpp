#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercas/donaldson.hpp"

#include <random>

using namespace floercas;

namespace {

GaussianRational q(long p, unsigned long d = 1) { return GaussianRational(Rational(p, d)); }

Rational two_pow(unsigned e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
  return Rational(z);
}

DonaldsonSeries one_term(const IntVector& K, const Rational& a, const IntMatrix& Q) {
  DonaldsonSeries s;
  for (std::size_t i = 0; i < Q.size(); ++i) s.basis_names.push_back("e" + std::to_string(i));
  s.Q = Q;
  s.add_term(K, a);
  return s;
}

}  // namespace

TEST_CASE("product series") {
  const auto s11 = product_series(1, 1);
  REQUIRE(s11.terms.size() == 1);
  CHECK(s11.terms.at({0, 0}) == 4);

  const auto s22 = product_series(2, 2);
  REQUIRE(s22.terms.size() == 2);
  CHECK(s22.terms.at({2, 2}) == 512);
  CHECK(s22.terms.at({-2, -2}) == -512);

  const auto s21 = product_series(2, 1);
  REQUIRE(s21.terms.size() == 3);
  CHECK(s21.terms.at({0, 2}) == 4);
  CHECK(s21.terms.at({0, 0}) == -8);
  CHECK(s21.terms.at({0, -2}) == 4);

  CHECK(product_series(1, 2) == s21);
  const auto s32 = product_series(3, 2);
  CHECK(s32.terms.at({2, 4}) == two_pow(16));
  CHECK(s32.terms.at({-2, -4}) == two_pow(16));
  CHECK(product_series(4, 4).terms.at({6, 6}) == two_pow(7 * 9 + 2));
}

TEST_CASE("evaluation") {
  const auto v = evaluate(product_series(2, 2), {1, 0}, 6);
  CHECK(v == TruncatedSeries({0, 2048, 0, q(4096, 3), 0, q(4096, 15)}, 6));
  CHECK(evaluate(product_series(1, 1), {1, 0}, 4) == TruncatedSeries::constant(4, 4));
  const auto s = one_term({0}, 1, {{2}});
  CHECK(evaluate(s, {1}, 5) == TruncatedSeries({1, 0, 1, 0, q(1, 2)}, 5));
}

TEST_CASE("evaluation denominators divide N!") {
  const std::size_t n = 8;
  Integer fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
  for (int g = 1; g <= 4; ++g)
    for (int h = 1; h <= 4; ++h)
      for (const IntVector& D : {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}, IntVector{2, -3}}) {
        const auto v = evaluate(product_series(g, h), D, n);
        for (const auto& c : v.coeffs()) {
          CHECK(c.im() == 0);
          CHECK(mpz_divisible_p(fact.get_mpz_t(), c.re().get_den_mpz_t()) != 0);
        }
      }
}

TEST_CASE("fiber sums reproduce products") {
  auto glue = [](int g, int h1, int h2) {
    return fiber_sum(glue_along_first(product_series_oriented(g, h1), product_series_oriented(g, h2), g));
  };
  const auto s212 = glue(2, 1, 2);
  CHECK(s212.terms.size() == 2);
  CHECK(s212.terms.at({4, 2}) == two_pow(16));
  CHECK(s212.terms.at({-4, -2}) == two_pow(16));
  CHECK(s212.terms == product_series_oriented(2, 3).terms);

  const auto s222 = glue(2, 2, 2);
  CHECK(s222.terms.at({6, 2}) == two_pow(23));
  CHECK(s222.terms.at({-6, -2}) == -two_pow(23));
  CHECK(s222.terms == product_series_oriented(2, 4).terms);

  CHECK(glue(2, 1, 1).terms == product_series_oriented(2, 2).terms);
  CHECK(glue(3, 1, 1).terms == product_series_oriented(3, 2).terms);
  CHECK(glue(3, 1, 2).terms == product_series_oriented(3, 3).terms);

  const auto t = glue(1, 1, 1);
  CHECK(t.terms.size() == 3);
  CHECK(t.terms.at({2, 0}) == 4);
  CHECK(t.terms.at({0, 0}) == -8);
  CHECK(t.terms.at({-2, 0}) == 4);
  CHECK(t.terms == product_series_oriented(1, 2).terms);
}

TEST_CASE("fiber sums associate") {
  for (int g : {2, 3}) {
    const auto a = product_series_oriented(g, 1);
    const auto b = product_series_oriented(g, 2);
    const auto c = product_series_oriented(g, 1);
    const auto left = fiber_sum(glue_along_first(fiber_sum(glue_along_first(a, b, g)), c, g));
    const auto right = fiber_sum(glue_along_first(a, fiber_sum(glue_along_first(b, c, g)), g));
    CHECK(left == right);
    CHECK(left.terms == product_series_oriented(g, 4).terms);
  }
}

TEST_CASE("fiber sum input validation") {
  auto in = glue_along_first(product_series(2, 1), product_series(2, 1), 2);
  in.P2 = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(fiber_sum(in), std::invalid_argument);
  auto in2 = glue_along_first(product_series(2, 1), product_series(2, 1), 2);
  in2.a.simple_type = false;
  CHECK_THROWS_AS(fiber_sum(in2), std::invalid_argument);
  auto in3 = glue_along_first(product_series(2, 1), product_series(2, 1), 2);
  in3.sigma = {1, 1};
  CHECK_THROWS_AS(fiber_sum(in3), std::invalid_argument);
  // no surviving pairs
  auto in4 = glue_along_first(product_series(3, 1), product_series(2, 1), 2);
  in4.a = one_term({0, 0}, 1, {{0, 1}, {1, 0}});
  CHECK(fiber_sum(in4).terms.empty());
}

TEST_CASE("finite type orders") {
  CHECK(finite_type_order(0, false) == 0);
  CHECK(finite_type_order(1, false) == 1);
  CHECK(finite_type_order(1, true) == 1);
  CHECK(finite_type_order(2, false) == 2);
  CHECK(finite_type_order(2, true) == 1);
  CHECK(finite_type_order(3, false) == 4);
  for (int g = 0; g <= 10; ++g) CHECK(finite_type_order(g, true) <= finite_type_order(g, false));
}

TEST_CASE("congruence checks") {
  const auto ok = congruence_check(product_series(3, 2), {0, 1}, 2);
  CHECK(ok.passed());
  const auto oriented = congruence_check(product_series_oriented(2, 3), {1, 0}, 2);
  CHECK(oriented.passed());
  CHECK(oriented.verdicts.size() == 2);

  const auto bad = congruence_check(one_term({1, 0}, 1, {{0, 1}, {1, 0}}), {0, 1}, 2);
  CHECK_FALSE(bad.passed());
  DonaldsonSeries empty = product_series(1, 1);
  empty.terms.clear();
  CHECK(congruence_check(empty, {1, 0}, 3).passed());
}

TEST_CASE("combining series for w and w + Sigma") {
  const auto s = product_series(2, 2);
  DonaldsonSeries zero = s;
  zero.terms.clear();
  CHECK(w_sigma_combine(s, zero) == s);
  const auto a = one_term({1, 0}, 3, {{0, 1}, {1, 0}});
  const auto b = one_term({1, 0}, 5, {{0, 1}, {1, 0}});
  CHECK(w_sigma_combine(a, b).terms.at({1, 0}) == 8);
  const auto c = one_term({1, 0}, -3, {{0, 1}, {1, 0}});
  CHECK(w_sigma_combine(a, c).terms.empty());
  CHECK_THROWS_AS(w_sigma_combine(a, one_term({1}, 1, {{1}})), std::invalid_argument);
}

TEST_CASE("twisted combination") {
  const auto s = one_term({0}, 1, {{2}});
  // e^{t^2} + i^0 e^{-t^2} = 2 + t^4
  const auto v = twisted_combination(s, {1}, 5, 0, 1);
  CHECK(v == TruncatedSeries({2, 0, 0, 0, 1}, 5));
  const auto w = twisted_combination(s, {1}, 5, 2, Rational(1, 2));
  CHECK(w == TruncatedSeries({0, 0, 1, 0, 0}, 5));
}
