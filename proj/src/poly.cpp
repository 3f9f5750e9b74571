#include "floercas/poly.hpp"

namespace floercas {

int Monomial::pure_power_var() const {
  int found = -1;
  for (int k = 0; k < kNumVars; ++k) {
    if (e[k] == 0) continue;
    if (found >= 0) return -1;
    found = k;
  }
  return found;
}

std::string Monomial::to_string(const VarNames& names) const {
  if (is_one()) return "1";
  std::string out;
  for (int k = 0; k < kNumVars; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

namespace {

std::strong_ordering lex(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < kNumVars; ++k)
    if (a.e[k] != b.e[k]) return a.e[k] <=> b.e[k];
  return std::strong_ordering::equal;
}

// The monomial with the smaller exponent in the last differing variable is greater.
std::strong_ordering revlex(const Monomial& a, const Monomial& b) {
  for (int k = kNumVars - 1; k >= 0; --k)
    if (a.e[k] != b.e[k]) return b.e[k] <=> a.e[k];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Grlex:
      if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
      return lex(a, b);
    case Kind::Grevlex:
      if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
      return revlex(a, b);
    case Kind::WeightedGrevlex:
      if (a.weighted_degree() != b.weighted_degree()) return a.weighted_degree() <=> b.weighted_degree();
      return revlex(a, b);
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Grlex:
      return "grlex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::WeightedGrevlex:
      return "weighted-grevlex";
  }
  return "?";
}

std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

std::string Mod4Degree::to_string() const {
  switch (kind) {
    case Kind::Residue:
      return std::to_string(residue) + " mod 4";
    case Kind::Inhomogeneous:
      return "inhomogeneous";
    case Kind::Zero:
      return "zero";
  }
  return "?";
}

Poly poly_constant(const GaussianRational& c, MonomialOrder ord) { return Poly::term(Monomial{}, c, ord); }

Poly poly_var(Var v, MonomialOrder ord) { return Poly::term(Monomial::var(v), GaussianRational(1), ord); }

}  // namespace floercas
