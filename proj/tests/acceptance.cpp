// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any fails.
// Expected values come from closed forms written out here, not from the library.

#include "floercas/donaldson.hpp"
#include "floercas/floer.hpp"
#include "floercas/fukaya.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace floercas;

namespace {

// Pinned limits (seconds).
constexpr double kLimitDimensions = 30;
constexpr double kLimitFiltration = 30;
constexpr double kLimitPrimitive = 60;  // applies to g = 4, k = 4 alone
constexpr double kLimitFiberSums = 10;
constexpr double kLimitDeterminism = 180;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void fail(const std::string& msg) {
    if (!ok) why << "; ";
    ok = false;
    why << msg;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(t0));
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (id < 10 ? " " : "") << id << "] " << title << " (" << timing
            << ")";
  if (!o.ok) std::cout << ": " << o.why.str();
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

// Pascal's triangle, independent of the library's binomial.
long choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<long> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<long> next(i + 1, 1);
    for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = next;
  }
  return row[k];
}

GaussianRational gq(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

std::vector<GaussianRational> sorted(std::vector<GaussianRational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// The lattice of eigenvalues: alpha in {4i : i = -r, -r+2, .., r}, times sqrt(-1) for r even;
// beta = 8 for r even, -8 for r odd.
std::vector<GaussianRational> alphas_at(int r) {
  std::vector<GaussianRational> out;
  for (int i = -r; i <= r; i += 2) out.push_back(r % 2 == 0 ? gq(0, 4 * i) : gq(4 * i));
  return out;
}
GaussianRational beta_at(int r) { return gq(r % 2 == 0 ? 8 : -8); }

bool spectrum_is(const EigenReport& rep, const std::vector<GaussianRational>& want) {
  return rep.fully_factored() && sorted(rep.multiset()) == sorted(want);
}

Rational pow2(unsigned e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
  return Rational(z);
}

// Product series written out by hand for basis {E = Sigma_g, F = Sigma_h}.
std::map<IntVector, Rational> product_oracle(int g, int h) {
  std::map<IntVector, Rational> t;
  if (g == 1 && h == 1) {
    t[{0, 0}] = 4;
  } else if (h == 1 || g == 1) {
    // 4^{m} sinh^{2m-2} of the class dual to the other factor, m = max genus
    const int m = std::max(g, h);
    const int n = 2 * m - 2;
    for (int j = 0; j <= n; ++j) {
      const long k = n - 2 * j;
      const Rational c = Rational(4 * choose(n, j) * (j % 2 ? -1 : 1));
      if (g == 1)
        t[{k, 0}] += c;
      else
        t[{0, k}] += c;
    }
  } else {
    const Rational c = pow2(7u * (g - 1) * (h - 1) + 2);
    const IntVector K = {2L * h - 2, 2L * g - 2};
    const IntVector negK = {-K[0], -K[1]};
    t[K] = c;
    t[negK] = (g % 2 == 0 && h % 2 == 0) ? -c : c;
  }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

void run_process_twice(Outcome& o, const std::string& cmd) {
  auto capture = [&](int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("cannot start " + cmd);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    status = pclose(p);
    return out;
  };
  int s1 = 0, s2 = 0;
  const std::string a = capture(s1);
  const std::string b = capture(s2);
  if (a.empty()) o.fail("empty report");
  if (a != b) o.fail("reports differ");
  if (s1 != s2) o.fail("exit statuses differ");
  if (a.find("/12 verified") == std::string::npos)
    o.fail("report lacks a summary line");
}

}  // namespace

int main() {
  criterion(1, "dimensions and monomial bases of F_r and Fbar_r, r = 1..6", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (int r = 1; r <= 6; ++r) {
      const QuotientRing f = build_F(r);
      const QuotientRing fb = build_Fbar(r);
      if (static_cast<long>(f.dim()) != choose(r + 2, 3)) o.fail("dim F_" + std::to_string(r));
      if (static_cast<long>(fb.dim()) != choose(r + 1, 2)) o.fail("dim Fbar_" + std::to_string(r));
      // alpha^a beta^b gamma^c with a + b + c <= r - 1, and no gamma for Fbar
      std::vector<Monomial> mons, mons_bar;
      for (unsigned x = 0; x < static_cast<unsigned>(r); ++x)
        for (unsigned y = 0; x + y < static_cast<unsigned>(r); ++y)
          for (unsigned z = 0; x + y + z < static_cast<unsigned>(r); ++z) {
            mons.push_back(Monomial{{x, y, z}});
            if (z == 0) mons_bar.push_back(Monomial{{x, y, 0}});
          }
      if (!is_exact_basis(f, mons)) o.fail("basis of F_" + std::to_string(r));
      if (!is_exact_basis(fb, mons_bar)) o.fail("basis of Fbar_" + std::to_string(r));
    }
    if (seconds_since(t0) > kLimitDimensions) o.fail("over time limit");
  });

  criterion(2, "relation grading, r <= 6", [](Outcome& o) {
    for (int r = 0; r <= 6; ++r) {
      const auto q = relations(Flavor::Classical, r);
      const auto R = relations(Flavor::Floer, r);
      for (int k = 0; k < 3; ++k) {
        const int want = 2 * r + 2 * k;
        for (const auto& [m, c] : q.p[k].terms()) {
          const int d = 2 * static_cast<int>(m[0]) + 4 * static_cast<int>(m[1]) + 6 * static_cast<int>(m[2]);
          if (d != want) o.fail("q r=" + std::to_string(r) + " k=" + std::to_string(k) + " degree " + std::to_string(d));
        }
        for (const auto& [m, c] : R.p[k].terms()) {
          const int d = 2 * static_cast<int>(m[0]) + 4 * static_cast<int>(m[1]) + 6 * static_cast<int>(m[2]);
          if ((d - want) % 4 != 0)
            o.fail("R r=" + std::to_string(r) + " k=" + std::to_string(k) + " degree " + std::to_string(d));
        }
      }
    }
  });

  criterion(3, "filtration quotients Jbar_r/Jbar_{r+1}, r = 0..4", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (int r = 0; r <= 4; ++r) {
      const SubquotientModule m = filtration_step(r);
      if (m.dim() != static_cast<std::size_t>(r + 1)) o.fail("dim at r=" + std::to_string(r));
      if (!spectrum_is(m.eigen_of(Var::A), alphas_at(r))) o.fail("alpha at r=" + std::to_string(r));
      if (!spectrum_is(m.eigen_of(Var::B), std::vector<GaussianRational>(r + 1, beta_at(r))))
        o.fail("beta at r=" + std::to_string(r));
    }
    if (seconds_since(t0) > kLimitFiltration) o.fail("over time limit");
  });

  criterion(4, "sign-twisted quotient characteristic polynomials, r = 1..5", [](Outcome& o) {
    for (int r = 1; r <= 5; ++r) {
      UniPoly want = UniPoly::constant(1);
      if (r % 2 == 0) {
        want = UniPoly::linear(0);
        for (int j = 2; j <= r; j += 2) want = want * UniPoly({gq(16L * j * j), 0, 1});
      } else {
        for (int j = 1; j <= r; j += 2) want = want * UniPoly({gq(-16L * j * j), 0, 1});
      }
      const UniPoly got = char_poly(filtration_quotient(r).mult_matrix(Var::A));
      if (got != want) o.fail("r=" + std::to_string(r) + ": " + got.to_string("alpha"));
    }
  });

  criterion(5, "K_r dimensions and spectra, r = 1..5; delta totals, g <= 4", [](Outcome& o) {
    for (int r = 1; r <= 5; ++r) {
      const SubquotientModule k = build_K(r);
      if (k.dim() != static_cast<std::size_t>(r)) o.fail("dim K_" + std::to_string(r));
      if (!spectrum_is(k.eigen_of(Var::A), alphas_at(r - 1))) o.fail("alpha on K_" + std::to_string(r));
      if (!spectrum_is(k.eigen_of(Var::B), std::vector<GaussianRational>(r, beta_at(r - 1))))
        o.fail("beta on K_" + std::to_string(r));
    }
    const std::array<long, 4> frozen = {1, 4, 16, 64};
    for (int g = 1; g <= 4; ++g) {
      long formula = 0;
      for (int k = 0; k < g; ++k) formula += (choose(2 * g - 2, k) - choose(2 * g - 2, k - 2)) * (g - k);
      const long psi = psi1_homology_total(psi1_homology_dims(g));
      const long delta = delta_hff(g).total_rank();
      if (formula != frozen[g - 1] || psi != formula || delta != formula)
        o.fail("g=" + std::to_string(g) + ": psi " + std::to_string(psi) + ", delta " + std::to_string(delta));
    }
  });

  criterion(6, "gamma J_{r-1} in J_r and gamma^r = 0 in F_r, r <= 5", [](Outcome& o) {
    const Poly gamma = poly_var(Var::C);
    for (int r = 1; r <= 5; ++r) {
      const QuotientRing f = build_F(r);
      for (const auto& p : relations(Flavor::Floer, r - 1).p)
        if (!f.reduce(gamma * p).is_zero()) o.fail("gamma J_" + std::to_string(r - 1));
      Poly pw = poly_constant(GaussianRational(1));
      for (int j = 0; j < r; ++j) pw = pw * gamma;
      if (!f.reduce(pw).is_zero()) o.fail("gamma^" + std::to_string(r));
    }
  });

  criterion(7, "reduced module at t = 0 against F_g/(gamma, beta^2 - 64), g = 1..5", [](Outcome& o) {
    for (int g = 1; g <= 5; ++g) {
      const RhffModule m = rhff(g, 1, 2);
      if (m.components.size() != static_cast<std::size_t>(2 * g - 1)) o.fail("rank at g=" + std::to_string(g));
      UniPoly from_module = UniPoly::constant(1);
      for (const auto& c : m.components) {
        from_module = from_module * UniPoly::linear(c.alpha.coeffs().empty() ? gq(0) : c.alpha.coeffs()[0]);
        if (c.beta * c.beta != gq(64)) o.fail("beta^2 != 64 at g=" + std::to_string(g));
      }
      const QuotientRing q = reduced_quotient(g);
      if (char_poly(q.mult_matrix(Var::A)) != from_module) o.fail("alpha spectrum at g=" + std::to_string(g));
      const Matrix b = q.mult_matrix(Var::B);
      if (!(b * b).is_scalar(gq(64))) o.fail("beta^2 - 64 at g=" + std::to_string(g));
    }
  });

  criterion(8, "primitive exterior powers, g <= 4, k <= g", [](Outcome& o) {
    for (int g = 1; g <= 4; ++g)
      for (int k = 0; k <= g; ++k) {
        const auto t0 = Clock::now();
        const long got = primitive_dim_exact(g, k);
        const double dt = seconds_since(t0);
        if (got != choose(2 * g, k) - choose(2 * g, k - 2))
          o.fail("g=" + std::to_string(g) + ",k=" + std::to_string(k) + ": " + std::to_string(got));
        if (g == 4 && k == 4 && dt > kLimitPrimitive) o.fail("g=4,k=4 over time limit");
      }
  });

  criterion(9, "finite type orders", [](Outcome& o) {
    if (finite_type_order(1, false) != 1) o.fail("g=1");
    if (finite_type_order(2, false) != 2) o.fail("g=2");
    if (finite_type_order(2, true) != 1) o.fail("g=2, b1=0");
    for (int g = 1; g <= 10; ++g)
      for (bool b1 : {false, true})
        if (finite_type_order(g, b1) < finite_type_order(g - 1, b1)) o.fail("not monotone at g=" + std::to_string(g));
  });

  criterion(10, "fiber sums reproduce products", [](Outcome& o) {
    const auto t0 = Clock::now();
    // oracle in the glued basis {E = Sigma_g, F = Sigma_{h1+h2}}
    const std::vector<std::array<int, 3>> cases = {{2, 1, 1}, {2, 1, 2}, {2, 2, 2}, {3, 1, 1}, {3, 1, 2}, {1, 1, 1}};
    for (const auto& [g, h1, h2] : cases) {
      const std::string tag = "g=" + std::to_string(g) + " (" + std::to_string(h1) + "," + std::to_string(h2) + ")";
      const DonaldsonSeries a = product_series_oriented(g, h1);
      const DonaldsonSeries b = product_series_oriented(g, h2);
      if (a.terms != product_oracle(g, h1) || b.terms != product_oracle(g, h2)) o.fail(tag + ": inputs");
      const DonaldsonSeries s = fiber_sum(glue_along_first(a, b, g));
      if (s.terms != product_oracle(g, h1 + h2)) o.fail(tag);
    }
    // spot values: weight 2^{7g-9} ab and the (-1)^{g-1} sign
    const DonaldsonSeries s =
        fiber_sum(glue_along_first(product_series_oriented(2, 2), product_series_oriented(2, 2), 2));
    if (s.terms.size() != 2 || s.terms.at({6, 2}) != pow2(23) || s.terms.at({-6, -2}) != -pow2(23))
      o.fail("genus 2 (2,2) weights");
    // genus 1: 4 sinh^2 structure, 4e^{2S} - 8 + 4e^{-2S}
    const DonaldsonSeries t = fiber_sum(glue_along_first(product_series_oriented(1, 1), product_series_oriented(1, 1), 1));
    if (t.terms != std::map<IntVector, Rational>{{{-2, 0}, 4}, {{0, 0}, -8}, {{2, 0}, 4}}) o.fail("genus 1 branch");
    if (seconds_since(t0) > kLimitFiberSums) o.fail("over time limit");
  });

  criterion(11, "congruence K.Sigma = 2g(Sigma) - 2 mod 4 on products, g, h <= 4", [](Outcome& o) {
    for (int g = 1; g <= 4; ++g)
      for (int h = 1; h <= 4; ++h) {
        const DonaldsonSeries s = product_series_oriented(g, h);
        for (const auto& [sigma, genus] : {std::pair(IntVector{1, 0}, g), std::pair(IntVector{0, 1}, h)}) {
          // independent pairing with Q = [[0,1],[1,0]]
          for (const auto& [K, c] : s.terms) {
            const long pairing = K[0] * sigma[1] + K[1] * sigma[0];
            if (((pairing - (2L * genus - 2)) % 4 + 4) % 4 != 0)
              o.fail("(" + std::to_string(g) + "," + std::to_string(h) + ") genus " + std::to_string(genus) +
                     " K.Sigma=" + std::to_string(pairing));
          }
          const bool lib = congruence_check(s, sigma, genus).passed();
          bool mine = true;
          for (const auto& [K, c] : s.terms)
            mine = mine && (((K[0] * sigma[1] + K[1] * sigma[0]) - (2L * genus - 2)) % 4 + 4) % 4 == 0;
          if (lib != mine) o.fail("library verdict disagrees with direct pairing");
        }
      }
  });

  criterion(12, "check --max-genus 3 is byte-identical across runs", [](Outcome& o) {
    const auto t0 = Clock::now();
    run_process_twice(o, std::string(FLOERCAS_BINARY) + " check --max-genus 3 --format text 2>&1");
    if (seconds_since(t0) > kLimitDeterminism) o.fail("over time limit");
  });

  std::cout << (12 - failures) << "/12 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
