#pragma once

#include "floercas/matrix.hpp"
#include "floercas/poly.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace floercas {

/// Reduced, monic Groebner basis over Q(sqrt(-1)), sorted by leading monomial ascending.
struct GroebnerBasis {
  std::vector<Poly> generators;
  MonomialOrder order;

  bool is_unit_ideal() const {
    return generators.size() == 1 && generators[0].leading_monomial().is_one();
  }
  std::vector<Monomial> leading_monomials() const;
};

/// Reduced Groebner basis of the ideal generated by gens.
///
/// Buchberger's algorithm with the sugar selection strategy, the product and
/// chain criteria, and final inter-reduction. Deterministic: pair selection
/// breaks ties by sugar, then lcm, then insertion index.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord = MonomialOrder::grlex());

/// Fully reduced remainder of p modulo gb.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

/// Thrown when the quotient by a Groebner basis is infinite-dimensional.
class InfiniteQuotientError : public std::runtime_error {
 public:
  InfiniteQuotientError(int witness_var, const std::string& what)
      : std::runtime_error(what), witness_var_(witness_var) {}
  /// Variable with no pure power among the leading monomials.
  int witness_var() const { return witness_var_; }

 private:
  int witness_var_;
};

/// Monomials outside the leading-term ideal, sorted by total degree and then
/// with alpha-heavy monomials first. Throws InfiniteQuotientError.
std::vector<Monomial> staircase_basis(const GroebnerBasis& gb);

/// Finite-dimensional quotient Q(sqrt(-1))[alpha,beta,gamma]/I with its staircase
/// basis and the multiplication matrices of the three generators.
class QuotientRing {
 public:
  QuotientRing() = default;
  explicit QuotientRing(GroebnerBasis gb);
  static QuotientRing from_generators(const std::vector<Poly>& gens,
                                      const MonomialOrder& ord = MonomialOrder::grlex());

  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Column j holds the staircase coordinates of NF(v * basis_j).
  const Matrix& mult_matrix(Var v) const { return mult_[static_cast<int>(v)]; }
  /// Matrix of multiplication by an arbitrary element.
  Matrix mult_matrix(const Poly& p) const;

  Poly reduce(const Poly& p) const { return normal_form(p, gb_); }
  /// Staircase coordinates of NF(p).
  Vector coordinates(const Poly& p) const;
  Poly element(const Vector& coords) const;

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<std::array<unsigned, kNumVars>, std::size_t> index_;
  std::array<Matrix, kNumVars> mult_;
};

Matrix mult_matrix(const QuotientRing& ring, Var v);

/// Roots found among a candidate set, and whatever did not factor.
struct EigenReport {
  std::vector<std::pair<GaussianRational, unsigned>> roots;
  UniPoly remainder;

  bool fully_factored() const { return remainder.is_one(); }
  unsigned multiplicity(const GaussianRational& x) const;
  /// Roots repeated by multiplicity, in report order.
  std::vector<GaussianRational> multiset() const;
  std::string to_string() const;
};

/// Repeated synthetic division of a monic polynomial by (x - c) for each candidate c.
EigenReport factor_over_candidates(const UniPoly& cp, const std::vector<GaussianRational>& candidates);

/// {4k, 4k*sqrt(-1) : |k| <= bound} together with {8, -8, 0}, deterministically ordered.
std::vector<GaussianRational> spectrum_candidates(int bound);

/// char_poly(m) factored over spectrum_candidates(bound).
EigenReport eigen_report(const Matrix& m, int bound);

}  // namespace floercas
