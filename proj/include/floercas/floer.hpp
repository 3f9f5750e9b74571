#pragma once

#include "floercas/errors.hpp"
#include "floercas/groebner.hpp"

#include <array>
#include <string>
#include <vector>

namespace floercas {

/// Which recursion a relation triple comes from.
///   Classical: cohomology of the moduli space of stable bundles (variables a, b, c).
///   Floer:     instanton Floer cohomology of the surface times a circle.
///   Reduced:   the Floer relations modulo gamma (two components; the third is zero).
enum class Flavor { Classical, Floer, Reduced };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);  // "q", "R", "Rbar"

struct RelationTriple {
  int r = 0;
  Flavor flavor = Flavor::Floer;
  std::array<Poly, 3> p;

  std::vector<Poly> generators() const;
};

/// Unrolls the three-term recursion r times from (1, 0, 0).
///
///   p1' = x p1 + r^2 p2
///   p2' = (y + s_r) p1 + 2r/(r+1) p3     s_r = (-1)^{r+1} 8 (Floer/Reduced), 0 (Classical)
///   p3' = z p1                           (Reduced: p3 stays 0)
RelationTriple relations(Flavor flavor, int r, const MonomialOrder& ord = MonomialOrder::grlex());

/// F_r = Q(i)[alpha,beta,gamma]/J_r. F_0 is the zero ring.
QuotientRing build_F(int r, const MonomialOrder& ord = MonomialOrder::grlex());
/// F_r / gamma F_r, presented by the reduced relations together with gamma.
QuotientRing build_Fbar(int r, const MonomialOrder& ord = MonomialOrder::grlex());
/// Q(i)[a,b,c]/I_r from the classical recursion.
QuotientRing build_classical(int r, const MonomialOrder& ord = MonomialOrder::grlex());

/// {alpha^a beta^b gamma^c : a+b+c < r}, or with gamma omitted when with_gamma is false.
std::vector<Monomial> expected_basis_monomials(int r, bool with_gamma);

/// True when the monomials reduce to a basis of the ring (right count, full rank).
bool is_exact_basis(const QuotientRing& ring, const std::vector<Monomial>& monomials);

/// A subquotient N/D of a quotient ring, with the induced actions of alpha, beta, gamma.
struct SubquotientModule {
  std::string name;
  std::size_t ambient_dim = 0;
  std::vector<Vector> denominator_basis;
  /// Representatives of a basis of N/D (independent modulo D).
  std::vector<Vector> quotient_basis;
  std::array<Matrix, kNumVars> action;
  std::array<EigenReport, kNumVars> eigen;

  std::size_t dim() const { return quotient_basis.size(); }
  const Matrix& action_of(Var v) const { return action[static_cast<int>(v)]; }
  const EigenReport& eigen_of(Var v) const { return eigen[static_cast<int>(v)]; }
};

/// Builds N/D from spanning sets. Throws FalsificationError when D is not
/// contained in N or when N/D is not stable under the ring generators.
SubquotientModule make_subquotient(const QuotientRing& ring, const std::vector<Vector>& numerator_span,
                                   const std::vector<Vector>& denominator_span, int spectrum_bound,
                                   std::string name);

/// Eigenvalue pair (alpha, beta) on the one-dimensional piece labelled i:
/// (4i sqrt(-1), 8) for i even and (4i, -8) for i odd.
std::pair<GaussianRational, GaussianRational> lattice_eigenpair(int i);

/// Ideal quotient Jbar_r / Jbar_{r+1} inside Fbar_{r+1}.
SubquotientModule filtration_step(int r);

/// K_r = J_{r-1} / (J_r + gamma J_{r-2}) inside F_r, with J_{-1} the whole ring.
SubquotientModule build_K(int r);

/// K_r computed the second way, as ker(gamma) / gamma ker(gamma^2) inside F_r.
SubquotientModule build_K_via_kernels(int r);

/// F_{r+1} / (beta + (-1)^{r+1} 8, gamma).
QuotientRing filtration_quotient(int r);
/// The product the filtration quotient's alpha-characteristic polynomial should equal:
/// r even: alpha (alpha^2 + 16 r^2)(alpha^2 + 16 (r-2)^2) ... (alpha^2 + 16 * 2^2)
/// r odd:  (alpha^2 - 16 r^2)(alpha^2 - 16 (r-2)^2) ... (alpha^2 - 16 * 1^2)
UniPoly filtration_quotient_charpoly(int r);

/// F_g / (gamma, beta^2 - 64).
QuotientRing reduced_quotient(int g);

/// C(2g, k) - C(2g, k-2).
long primitive_dim(int g, int k);
/// Kernel dimension of wedging with c^{g-k+1}, c = -2 sum_i psi_i psi_{i+g}, on
/// the k-th exterior power of a 2g-dimensional space.
long primitive_dim_exact(int g, int k);

long binomial(long n, long k);

struct FloerSummand {
  int k = 0;
  long multiplicity = 0;
  QuotientRing ring;  // F_{g-k}
};

struct FloerRing {
  int genus = 0;
  std::vector<FloerSummand> summands;
  long total_dim = 0;
};

/// HF_g = sum_k Lambda_0^k H^3 (x) F_{g-k}. With invariant_only, only k = 0.
FloerRing hf_assemble(int g, bool invariant_only = false);

/// Dimensions of the kernels of multiplication by gamma and gamma^2 on F_r.
std::pair<std::size_t, std::size_t> gamma_kernel_dims(int r);

struct Psi1Entry {
  int k = 0;
  long multiplicity = 0;  // C(2g-2, k) - C(2g-2, k-2)
  std::size_t dim_K = 0;  // dim K_{g-k}, computed exactly
};

/// Homology of multiplication by psi_1: sum_k Lambda_0^k H^3_red (x) K_{g-k}.
std::vector<Psi1Entry> psi1_homology_dims(int g);
long psi1_homology_total(const std::vector<Psi1Entry>& entries);

}  // namespace floercas
