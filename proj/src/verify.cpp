#include "floercas/verify.hpp"

#include "floercas/donaldson.hpp"
#include "floercas/floer.hpp"
#include "floercas/fukaya.hpp"
#include "floercas/json_io.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace floercas {

namespace {

// Runs body; a FalsificationError or any other exception becomes a failed result.
CriterionResult guarded(int id, std::string title, std::string claim,
                        const std::function<void(std::ostringstream&, bool&)>& body) {
  CriterionResult res{id, std::move(title), std::move(claim), true, {}};
  std::ostringstream detail;
  try {
    body(detail, res.passed);
  } catch (const std::exception& e) {
    res.passed = false;
    detail << "exception: " << e.what();
  }
  res.detail = detail.str();
  return res;
}

void note_failure(std::ostringstream& os, bool& ok, const std::string& msg) {
  if (os.tellp() > 0) os << "; ";
  ok = false;
  os << msg;
}

std::vector<GaussianRational> sorted(std::vector<GaussianRational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<GaussianRational> lattice_alphas(int top) {
  std::vector<GaussianRational> out;
  for (int i = -top; i <= top; i += 2) out.push_back(lattice_eigenpair(i).first);
  return out;
}

std::string list(const std::vector<GaussianRational>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].to_string();
  return s + "}";
}

// Checks an eigen report against an expected multiset of roots with nothing left over.
bool spectrum_is(const EigenReport& rep, const std::vector<GaussianRational>& expected) {
  return rep.fully_factored() && sorted(rep.multiset()) == sorted(expected);
}

}  // namespace

CriterionResult check_dimensions(int r_max) {
  return guarded(1, "ring dimensions and monomial bases",
                 "dim F_r = C(r+2,3), dim Fbar_r = C(r+1,2), standard monomials are exact bases, r = 1.." +
                     std::to_string(r_max),
                 [&](std::ostringstream& os, bool& ok) {
                   for (int r = 1; r <= r_max; ++r) {
                     const QuotientRing f = build_F(r);
                     const QuotientRing fb = build_Fbar(r);
                     if (static_cast<long>(f.dim()) != binomial(r + 2, 3))
                       note_failure(os, ok, "dim F_" + std::to_string(r) + " = " + std::to_string(f.dim()));
                     if (static_cast<long>(fb.dim()) != binomial(r + 1, 2))
                       note_failure(os, ok, "dim Fbar_" + std::to_string(r) + " = " + std::to_string(fb.dim()));
                     if (!is_exact_basis(f, expected_basis_monomials(r, true)))
                       note_failure(os, ok, "monomials do not form a basis of F_" + std::to_string(r));
                     if (!is_exact_basis(fb, expected_basis_monomials(r, false)))
                       note_failure(os, ok, "monomials do not form a basis of Fbar_" + std::to_string(r));
                   }
                   if (ok) os << "dims F_r: ";
                   if (ok)
                     for (int r = 1; r <= r_max; ++r) os << (r > 1 ? "," : "") << binomial(r + 2, 3);
                 });
}

CriterionResult check_grading(int r_max) {
  return guarded(2, "grading of the relations",
                 "q relations are homogeneous of degrees 2r, 2r+2, 2r+4; R relations are homogeneous mod 4, r <= " +
                     std::to_string(r_max),
                 [&](std::ostringstream& os, bool& ok) {
                   std::size_t checked = 0;
                   for (int r = 0; r <= r_max; ++r) {
                     const auto q = relations(Flavor::Classical, r);
                     const auto R = relations(Flavor::Floer, r);
                     for (int k = 0; k < 3; ++k) {
                       const int deg = 2 * r + 2 * k;
                       if (!q.p[k].is_zero()) {
                         ++checked;
                         const auto degs = q.p[k].weighted_degrees();
                         if (degs != std::set<int>{deg})
                           note_failure(os, ok, "q^" + std::to_string(k + 1) + "_" + std::to_string(r) +
                                                    " is not homogeneous of degree " + std::to_string(deg));
                       }
                       if (!R.p[k].is_zero()) {
                         ++checked;
                         const Mod4Degree m = R.p[k].mod4_degree();
                         if (m.kind != Mod4Degree::Kind::Residue || m.residue != deg % 4)
                           note_failure(os, ok, "R^" + std::to_string(k + 1) + "_" + std::to_string(r) +
                                                    " has mod 4 degree " + m.to_string());
                       }
                     }
                   }
                   if (ok) os << checked << " nonzero relation polynomials graded as claimed";
                 });
}

CriterionResult check_filtration_spectra(int r_max) {
  return guarded(3, "filtration quotients of the reduced ring",
                 "Jbar_r/Jbar_{r+1} has dim r+1, alpha = 4i or 4i sqrt(-1) by parity of r, beta = -8 or 8, r = 0.." +
                     std::to_string(r_max),
                 [&](std::ostringstream& os, bool& ok) {
                   for (int r = 0; r <= r_max; ++r) {
                     const SubquotientModule m = filtration_step(r);
                     const auto alphas = lattice_alphas(r);
                     const GaussianRational beta = lattice_eigenpair(r).second;
                     if (m.dim() != static_cast<std::size_t>(r + 1))
                       note_failure(os, ok, "r=" + std::to_string(r) + ": dim " + std::to_string(m.dim()));
                     if (!spectrum_is(m.eigen_of(Var::A), alphas))
                       note_failure(os, ok, "r=" + std::to_string(r) + ": alpha spectrum " +
                                                m.eigen_of(Var::A).to_string() + ", expected " + list(alphas));
                     if (!spectrum_is(m.eigen_of(Var::B), std::vector<GaussianRational>(r + 1, beta)))
                       note_failure(os, ok, "r=" + std::to_string(r) + ": beta spectrum " +
                                                m.eigen_of(Var::B).to_string());
                     if (ok) os << (r ? " " : "") << "r=" << r << ":" << m.eigen_of(Var::A).to_string();
                   }
                 });
}

CriterionResult check_socle_charpolys(int r_max) {
  return guarded(4, "characteristic polynomials of the sign-twisted quotients",
                 "alpha on F_{r+1}/(beta + (-1)^{r+1} 8, gamma) has the product characteristic polynomial, r = 1.." +
                     std::to_string(r_max),
                 [&](std::ostringstream& os, bool& ok) {
                   for (int r = 1; r <= r_max; ++r) {
                     const QuotientRing q = filtration_quotient(r);
                     const UniPoly got = char_poly(q.mult_matrix(Var::A));
                     const UniPoly want = filtration_quotient_charpoly(r);
                     if (got != want)
                       note_failure(os, ok, "r=" + std::to_string(r) + ": got " + got.to_string("alpha") +
                                                ", expected " + want.to_string("alpha"));
                   }
                   if (ok) os << "all " << r_max << " products match exactly";
                 });
}

CriterionResult check_K_modules(int r_max, int g_max) {
  return guarded(5, "the modules K_r and psi_1 homology",
                 "dim K_r = r with the lattice spectra and gamma = 0, both constructions agree, r = 1.." +
                     std::to_string(r_max) + "; delta module ranks equal psi_1 homology totals, g <= " +
                     std::to_string(g_max),
                 [&](std::ostringstream& os, bool& ok) {
                   for (int r = 1; r <= r_max; ++r) {
                     const std::string tag = "K_" + std::to_string(r);
                     const SubquotientModule k = build_K(r);
                     const SubquotientModule k2 = build_K_via_kernels(r);
                     const auto alphas = lattice_alphas(r - 1);
                     const GaussianRational beta = lattice_eigenpair(r - 1).second;
                     if (k.dim() != static_cast<std::size_t>(r))
                       note_failure(os, ok, tag + " has dim " + std::to_string(k.dim()));
                     if (k2.dim() != static_cast<std::size_t>(r))
                       note_failure(os, ok, tag + " via kernels has dim " + std::to_string(k2.dim()));
                     for (const SubquotientModule* m : {&k, &k2}) {
                       if (!spectrum_is(m->eigen_of(Var::A), alphas))
                         note_failure(os, ok, m->name + ": alpha spectrum " + m->eigen_of(Var::A).to_string());
                       if (!spectrum_is(m->eigen_of(Var::B), std::vector<GaussianRational>(r, beta)))
                         note_failure(os, ok, m->name + ": beta spectrum " + m->eigen_of(Var::B).to_string());
                       if (!m->action_of(Var::C).is_zero()) note_failure(os, ok, m->name + ": gamma acts nontrivially");
                     }
                   }
                   for (int g = 1; g <= g_max; ++g) {
                     const long psi = psi1_homology_total(psi1_homology_dims(g));
                     const long delta = delta_hff(g).total_rank();
                     if (psi != delta)
                       note_failure(os, ok, "g=" + std::to_string(g) + ": psi_1 homology " + std::to_string(psi) +
                                                " vs delta rank " + std::to_string(delta));
                     else if (ok)
                       os << (g > 1 ? " " : "") << "g=" << g << ":" << psi;
                   }
                 });
}

CriterionResult check_nilpotency(int r_max) {
  return guarded(6, "gamma shifts the ideals and is nilpotent",
                 "gamma J_{r-1} lies in J_r and gamma^r = 0 in F_r, r = 1.." + std::to_string(r_max),
                 [&](std::ostringstream& os, bool& ok) {
                   const Poly gamma = poly_var(Var::C);
                   for (int r = 1; r <= r_max; ++r) {
                     const QuotientRing f = build_F(r);
                     for (const auto& p : relations(Flavor::Floer, r - 1).p) {
                       if (p.is_zero()) continue;
                       if (!f.reduce(gamma * p).is_zero())
                         note_failure(os, ok, "gamma*(" + p.to_string() + ") is nonzero in F_" + std::to_string(r));
                     }
                     Poly power = poly_constant(GaussianRational(1));
                     for (int k = 0; k < r; ++k) power = power * gamma;
                     if (!f.reduce(power).is_zero()) note_failure(os, ok, "gamma^r is nonzero in F_" + std::to_string(r));
                   }
                   if (ok) os << "all normal forms vanish";
                 });
}

CriterionResult check_reduced_module(int g_max) {
  return guarded(7, "reduced Fukaya-Floer module at t = 0",
                 "rhff(g,1) at t = 0 is the spectrum of F_g/(gamma, beta^2 - 64) with beta^2 = 64, g = 1.." +
                     std::to_string(g_max),
                 [&](std::ostringstream& os, bool& ok) {
                   for (int g = 1; g <= g_max; ++g) {
                     const RhffModule m = rhff(g, 1, 2);
                     if (m.components.size() != static_cast<std::size_t>(2 * g - 1))
                       note_failure(os, ok, "g=" + std::to_string(g) + ": wrong rank");
                     for (const auto& c : m.components)
                       if (c.beta * c.beta != GaussianRational(64))
                         note_failure(os, ok, "beta^2 - 64 nonzero on a component");
                     const std::string why = rhff_mismatch(g, 1);
                     if (!why.empty()) note_failure(os, ok, "g=" + std::to_string(g) + ": " + why);
                   }
                   if (ok) os << "ranks 1.." << 2 * g_max - 1 << " confirmed";
                 });
}

CriterionResult check_primitive_parts(int g_max) {
  return guarded(8, "primitive exterior powers",
                 "kernel of c^{g-k+1} on Lambda^k has dim C(2g,k) - C(2g,k-2), g <= " + std::to_string(g_max),
                 [&](std::ostringstream& os, bool& ok) {
                   for (int g = 1; g <= g_max; ++g)
                     for (int k = 0; k <= g; ++k) {
                       const long a = primitive_dim(g, k);
                       const long b = primitive_dim_exact(g, k);
                       if (a != b)
                         note_failure(os, ok, "g=" + std::to_string(g) + ",k=" + std::to_string(k) + ": " +
                                                  std::to_string(b) + " vs " + std::to_string(a));
                     }
                   if (ok) os << "all pairs agree";
                 });
}

CriterionResult check_finite_type(int g_max) {
  return guarded(9, "finite type order bounds",
                 "orders 1 (g=1), 2 (g=2), 1 (g=2, b1=0); bounds monotone for g <= " + std::to_string(g_max),
                 [&](std::ostringstream& os, bool& ok) {
                   if (finite_type_order(1, false) != 1 || finite_type_order(1, true) != 1)
                     note_failure(os, ok, "g=1 is not of simple type");
                   if (finite_type_order(2, false) != 2) note_failure(os, ok, "g=2 order is not 2");
                   if (finite_type_order(2, true) != 1) note_failure(os, ok, "g=2, b1=0 order is not 1");
                   for (int g = 0; g <= g_max; ++g) {
                     if (finite_type_order(g, true) > finite_type_order(g, false))
                       note_failure(os, ok, "g=" + std::to_string(g) + ": b1=0 bound exceeds general bound");
                     if (g > 0 && (finite_type_order(g, true) < finite_type_order(g - 1, true) ||
                                   finite_type_order(g, false) < finite_type_order(g - 1, false)))
                       note_failure(os, ok, "g=" + std::to_string(g) + ": bound decreases");
                   }
                   if (ok) {
                     os << "general:";
                     for (int g = 0; g <= g_max; ++g) os << " " << finite_type_order(g, false);
                   }
                 });
}

CriterionResult check_fiber_sums() {
  return guarded(10, "fiber sums of products reproduce product series",
                 "fiber sums along Sigma_g of Sigma_g x Sigma_h1 and Sigma_g x Sigma_h2 equal Sigma_g x Sigma_{h1+h2}, "
                 "g = 2 (1,1),(1,2),(2,2), g = 3 (1,1),(1,2), g = 1 (1,1); sums are associative",
                 [&](std::ostringstream& os, bool& ok) {
                   const std::vector<std::array<int, 3>> cases = {{2, 1, 1}, {2, 1, 2}, {2, 2, 2},
                                                                  {3, 1, 1}, {3, 1, 2}, {1, 1, 1}};
                   for (const auto& [g, h1, h2] : cases) {
                     const DonaldsonSeries got = fiber_sum(
                         glue_along_first(product_series_oriented(g, h1), product_series_oriented(g, h2), g));
                     const DonaldsonSeries want = product_series_oriented(g, h1 + h2);
                     if (got.terms != want.terms)
                       note_failure(os, ok, "g=" + std::to_string(g) + " (" + std::to_string(h1) + "," +
                                                std::to_string(h2) + "): " + to_json(got).dump());
                   }
                   const DonaldsonSeries a = product_series_oriented(2, 1);
                   const DonaldsonSeries left = fiber_sum(glue_along_first(fiber_sum(glue_along_first(a, a, 2)), a, 2));
                   const DonaldsonSeries right = fiber_sum(glue_along_first(a, fiber_sum(glue_along_first(a, a, 2)), 2));
                   if (left.terms != right.terms) note_failure(os, ok, "association changes the result");
                   if (left.terms != product_series_oriented(2, 3).terms)
                     note_failure(os, ok, "triple sum differs from the genus (2,3) product");
                   if (ok) os << cases.size() << " gluings and one triple sum match termwise";
                 });
}

CriterionResult check_congruence(int g_max) {
  return guarded(11, "basic class congruence for products",
                 "every basic class of Sigma_g x Sigma_h satisfies K.Sigma = 2 genus(Sigma) - 2 mod 4 for both "
                 "factors, g, h <= " + std::to_string(g_max),
                 [&](std::ostringstream& os, bool& ok) {
                   int checked = 0;
                   for (int g = 1; g <= g_max; ++g)
                     for (int h = 1; h <= g_max; ++h) {
                       const DonaldsonSeries s = product_series(g, h);
                       const int big = std::max(g, h);
                       const int small = std::min(g, h);
                       const std::array<std::pair<IntVector, int>, 2> sides = {std::pair(IntVector{1, 0}, big),
                                                                               std::pair(IntVector{0, 1}, small)};
                       for (const auto& [sigma, genus] : sides) {
                         ++checked;
                         const CongruenceReport rep = congruence_check(s, sigma, genus);
                         if (rep.passed()) continue;
                         std::string bad;
                         for (const auto& v : rep.verdicts)
                           if (!v.ok) bad += (bad.empty() ? "" : ",") + std::to_string(v.pairing);
                         note_failure(os, ok, "(" + std::to_string(g) + "," + std::to_string(h) + ") Sigma=" +
                                                  s.basis_names[sigma[0] ? 0 : 1] + " genus " + std::to_string(genus) +
                                                  ": K.Sigma in {" + bad + "}");
                       }
                     }
                   if (ok) os << checked << " series/surface pairs pass";
                 });
}

CriterionResult check_repeatability(int g_max) {
  return guarded(12, "repeatable output",
                 "rebuilding rings, spectra and series yields byte-identical serializations",
                 [&](std::ostringstream& os, bool& ok) {
                   auto build = [&]() {
                     Json j = Json::array();
                     for (int g = 1; g <= g_max; ++g) j.push_back(to_json(hf_assemble(g), g));
                     j.push_back(to_json(product_series(g_max, 2)));
                     j.push_back(to_json(fiber_sum(glue_along_first(product_series_oriented(2, 1),
                                                                    product_series_oriented(2, 2), 2))));
                     return j.dump();
                   };
                   const std::string first = build();
                   const std::string second = build();
                   if (first != second) note_failure(os, ok, "serializations differ");
                   if (ok) os << first.size() << " bytes identical";
                 });
}

std::vector<CriterionResult> run_checks(int max_genus) {
  const int g = std::max(1, max_genus);
  std::vector<CriterionResult> out;
  out.push_back(check_dimensions(6));
  out.push_back(check_grading(6));
  out.push_back(check_filtration_spectra(4));
  out.push_back(check_socle_charpolys(5));
  out.push_back(check_K_modules(5, std::min(g, 4)));
  out.push_back(check_nilpotency(5));
  out.push_back(check_reduced_module(std::min(g, 5)));
  out.push_back(check_primitive_parts(std::min(g, 4)));
  out.push_back(check_finite_type(10));
  out.push_back(check_fiber_sums());
  out.push_back(check_congruence(std::min(g, 4)));
  out.push_back(check_repeatability(std::min(g, 3)));
  return out;
}

}  // namespace floercas
