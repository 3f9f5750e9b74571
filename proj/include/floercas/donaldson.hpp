#pragma once

#include "floercas/gaussian_rational.hpp"
#include "floercas/truncated_series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace floercas {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// e^{Q/2} sum_i a_i e^{K_i} over a named sublattice of H_2 with intersection form Q.
///
/// Classes K are stored as coordinate vectors in the named basis; K . D means
/// K^T Q D. Terms are keyed by K, so classes are distinct and zero
/// coefficients are pruned on insertion.
struct DonaldsonSeries {
  std::vector<std::string> basis_names;
  IntMatrix Q;
  std::map<IntVector, Rational> terms;
  bool simple_type = true;

  std::size_t rank() const { return basis_names.size(); }
  void add_term(const IntVector& K, const Rational& a);
  std::int64_t pair(const IntVector& x, const IntVector& y) const;
  std::int64_t square(const IntVector& x) const { return pair(x, x); }
  /// Throws std::invalid_argument when Q is not square symmetric of the basis size,
  /// or when a class has the wrong length.
  void validate() const;
  bool same_lattice(const DonaldsonSeries& o) const;
  friend bool operator==(const DonaldsonSeries&, const DonaldsonSeries&) = default;
};

/// Series of Sigma_g x Sigma_h over the basis {E, F}, where E is the factor of
/// larger genus (the arguments are swapped when g < h) and Q = [[0,1],[1,0]].
DonaldsonSeries product_series(int g, int h);

/// Same series with its two basis vectors exchanged (names, Q and classes).
DonaldsonSeries swap_basis(const DonaldsonSeries& s);

/// e^{Q(D) t^2 / 2} sum_i a_i e^{(K_i . D) t} modulo t^N.
TruncatedSeries evaluate(const DonaldsonSeries& s, const IntVector& D, std::size_t order);

/// Two series glued along an embedded surface Sigma of genus g.
///
/// The glued lattice carries basis_names, Q and sigma (the class of Sigma).
/// A glued class D splits as D1 = P1 D and D2 = P2 D on the two sides, where
/// P1 and P2 map glued coordinates to side coordinates. sigma_a and sigma_b
/// are the classes of Sigma on each side.
struct FiberSumInput {
  DonaldsonSeries a;
  DonaldsonSeries b;
  int genus = 1;
  IntVector sigma_a;
  IntVector sigma_b;
  std::vector<std::string> basis_names;
  IntMatrix Q;
  IntVector sigma;
  IntMatrix P1;
  IntMatrix P2;
};

/// Checks D^2 = D1^2 + D2^2 (as P1^T Q_a P1 + P2^T Q_b P2 = Q), Sigma^2 = 0 on
/// every side, and the shapes. Throws std::invalid_argument on failure.
void validate_fiber_input(const FiberSumInput& in);

/// Fiber sum series. For g >= 2 only pairs with K.Sigma = L.Sigma = +-(2g-2)
/// survive, weighted 2^{7g-9} a b (times (-1)^{g-1} on the minus side), at the
/// class K (+) L +- 2 Sigma. For g = 1 every pair contributes with the factor
/// sinh^2(Sigma . D t) expanded. Throws std::invalid_argument on non simple
/// type input.
DonaldsonSeries fiber_sum(const FiberSumInput& in);

/// Gluing input for two series over {E, F}-type bases glued along E, where E
/// is the common surface of genus g and the F classes add. The result has
/// basis {E, F} with Q = [[0,1],[1,0]].
FiberSumInput glue_along_first(const DonaldsonSeries& a, const DonaldsonSeries& b, int g);

/// The product series of Sigma_g x Sigma_h written over {E = Sigma_g, F = Sigma_h}
/// regardless of which genus is larger.
DonaldsonSeries product_series_oriented(int g, int h);

/// Order bound: sum_{i=1}^g ([(2g-2i)/4] + 1), or [(2g-2)/4] + 1 when b1 = 0. g = 0 gives 0.
int finite_type_order(int g, bool b1_zero);

struct CongruenceVerdict {
  IntVector K;
  std::int64_t pairing = 0;
  bool ok = false;
};

struct CongruenceReport {
  int genus = 0;
  IntVector sigma;
  std::vector<CongruenceVerdict> verdicts;
  bool passed() const;
};

/// K . Sigma = 2g - 2 (mod 4) for every class, with Sigma given as a class in the series basis.
CongruenceReport congruence_check(const DonaldsonSeries& s, const IntVector& sigma, int g);

/// Termwise sum of the series for w and for w + Sigma. Throws on lattice mismatch.
DonaldsonSeries w_sigma_combine(const DonaldsonSeries& a, const DonaldsonSeries& b);

/// c * ( s(e^{tD}) + sqrt(-1)^e * s(e^{sqrt(-1) t D}) ).
///
/// Both the exponent e (d_0 minus half the degree of the inserted class) and
/// the overall constant c are supplied by the caller.
TruncatedSeries twisted_combination(const DonaldsonSeries& s, const IntVector& D, std::size_t order,
                                    long exponent, const Rational& normalization);

}  // namespace floercas
