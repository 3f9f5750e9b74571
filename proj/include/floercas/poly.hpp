#pragma once

#include "floercas/gaussian_rational.hpp"
#include "floercas/truncated_series.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace floercas {

/// Ring variables. The Floer ring uses alpha, beta, gamma; the classical
/// cohomology ring uses a, b, c in the same slots.
enum class Var : int { A = 0, B = 1, C = 2 };
inline constexpr int kNumVars = 3;

using VarNames = std::array<std::string, kNumVars>;
inline const VarNames kFloerNames{"alpha", "beta", "gamma"};
inline const VarNames kClassicalNames{"a", "b", "c"};

struct Monomial {
  std::array<unsigned, kNumVars> e{0, 0, 0};

  static Monomial var(Var v, unsigned power = 1) {
    Monomial m;
    m.e[static_cast<int>(v)] = power;
    return m;
  }

  unsigned operator[](int i) const { return e[i]; }
  unsigned total_degree() const { return e[0] + e[1] + e[2]; }
  /// Cohomological degree with deg alpha = 2, deg beta = 4, deg gamma = 6.
  int weighted_degree() const { return 2 * static_cast<int>(e[0]) + 4 * static_cast<int>(e[1]) + 6 * static_cast<int>(e[2]); }
  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

  bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
  }
  /// Requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    return Monomial{{o.e[0] - e[0], o.e[1] - e[1], o.e[2] - e[2]}};
  }
  Monomial lcm(const Monomial& o) const {
    return Monomial{{std::max(e[0], o.e[0]), std::max(e[1], o.e[1]), std::max(e[2], o.e[2])}};
  }
  bool coprime(const Monomial& o) const {
    for (int k = 0; k < kNumVars; ++k)
      if (e[k] != 0 && o.e[k] != 0) return false;
    return true;
  }
  /// Index of the single variable when the monomial is a pure power, else -1.
  int pure_power_var() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string(const VarNames& names = kFloerNames) const;
};

/// Monomial orders on three variables with precedence alpha > beta > gamma.
struct MonomialOrder {
  enum class Kind { Grevlex, Grlex, WeightedGrevlex };
  Kind kind = Kind::Grlex;

  static MonomialOrder grlex() { return {Kind::Grlex}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex}; }
  /// Weights (2,4,6), ties broken reverse-lexicographically.
  static MonomialOrder weighted_grevlex() { return {Kind::WeightedGrevlex}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

/// Degree class modulo 4 shared by every term, or a marker for inhomogeneous
/// (and for the zero polynomial, which has no degree).
struct Mod4Degree {
  enum class Kind { Residue, Inhomogeneous, Zero };
  Kind kind = Kind::Zero;
  int residue = 0;

  bool homogeneous() const { return kind != Kind::Inhomogeneous; }
  friend bool operator==(const Mod4Degree&, const Mod4Degree&) = default;
  std::string to_string() const;
};

/// Coefficient-type hooks used by SparsePoly.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<GaussianRational> {
  static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
  /// Powers of t present in the coefficient.
  static std::vector<std::size_t> t_powers(const GaussianRational&) { return {0}; }
  static std::string to_string(const GaussianRational& c) { return c.to_string(); }
};

template <>
struct CoeffTraits<TruncatedSeries> {
  static bool is_zero(const TruncatedSeries& c) { return c.is_zero(); }
  static std::vector<std::size_t> t_powers(const TruncatedSeries& c) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < c.order(); ++k)
      if (!c[k].is_zero()) out.push_back(k);
    return out;
  }
  static std::string to_string(const TruncatedSeries& c) { return c.to_string(); }
};

/// Sparse polynomial in three variables over a fixed coefficient kind.
///
/// Terms are kept sorted descending in the polynomial's monomial order with
/// zero coefficients pruned, so iteration starts at the leading term and the
/// representation is canonical.
template <class C>
class SparsePoly {
  struct Desc {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.compare(a, b) > 0; }
  };

 public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C, Desc>;

  explicit SparsePoly(MonomialOrder ord = MonomialOrder::grlex()) : terms_(Desc{ord}) {}

  static SparsePoly term(const Monomial& m, const C& c, MonomialOrder ord = MonomialOrder::grlex()) {
    SparsePoly p(ord);
    p.add_term(m, c);
    return p;
  }

  MonomialOrder order() const { return terms_.key_comp().ord; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const C& leading_coeff() const { return terms_.begin()->second; }

  /// Coefficient of m, or nullopt if absent.
  std::optional<C> coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (CoeffTraits<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly with_order(const MonomialOrder& ord) const {
    SparsePoly p(ord);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, c);
    return p;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  template <class S>
  SparsePoly scaled(const S& s) const {
    SparsePoly p(order());
    for (const auto& [m, c] : terms_) p.add_term(m, c * s);
    return p;
  }

  SparsePoly shifted(const Monomial& by) const {
    SparsePoly p(order());
    for (const auto& [m, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), m * by, c);
    return p;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly p(a.order());
    for (const auto& [m, c] : a.terms_) p.terms_.emplace_hint(p.terms_.end(), m, -c);
    return p;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly p(a.order());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    return p;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  /// Cohomological degree classes of all terms (t counted as -2).
  std::set<int> weighted_degrees() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_)
      for (std::size_t k : CoeffTraits<C>::t_powers(c)) out.insert(m.weighted_degree() - 2 * static_cast<int>(k));
    return out;
  }

  Mod4Degree mod4_degree() const {
    Mod4Degree d;
    for (int deg : weighted_degrees()) {
      int r = ((deg % 4) + 4) % 4;
      if (d.kind == Mod4Degree::Kind::Zero) {
        d = {Mod4Degree::Kind::Residue, r};
      } else if (d.residue != r) {
        return {Mod4Degree::Kind::Inhomogeneous, 0};
      }
    }
    return d;
  }

  std::string to_string(const VarNames& names = kFloerNames) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string cs = CoeffTraits<C>::to_string(c);
      const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      std::string body;
      if (m.is_one()) {
        body = compound ? "(" + cs + ")" : cs;
      } else if (cs == "1") {
        body = m.to_string(names);
      } else if (cs == "-1") {
        body = "-" + m.to_string(names);
      } else {
        body = (compound ? "(" + cs + ")" : cs) + "*" + m.to_string(names);
      }
      if (out.empty())
        out = body;
      else if (body[0] == '-')
        out += " - " + body.substr(1);
      else
        out += " + " + body;
    }
    return out;
  }

 private:
  TermMap terms_;
};

using Poly = SparsePoly<GaussianRational>;
using SeriesPoly = SparsePoly<TruncatedSeries>;

template <class C>
SparsePoly<C> poly_mul(const SparsePoly<C>& p, const SparsePoly<C>& q) {
  return p * q;
}

template <class C>
Mod4Degree mod4_degree(const SparsePoly<C>& p) {
  return p.mod4_degree();
}

/// Convenience constructors over Q(sqrt(-1)).
Poly poly_constant(const GaussianRational& c, MonomialOrder ord = MonomialOrder::grlex());
Poly poly_var(Var v, MonomialOrder ord = MonomialOrder::grlex());

}  // namespace floercas
