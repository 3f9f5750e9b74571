#include "floercas/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace floercas {

namespace {

int sugar_degree(const Monomial& m, const MonomialOrder& ord) {
  return ord.kind == MonomialOrder::Kind::WeightedGrevlex ? m.weighted_degree()
                                                           : static_cast<int>(m.total_degree());
}

int poly_sugar(const Poly& p) {
  int s = 0;
  for (const auto& [m, c] : p.terms()) s = std::max(s, sugar_degree(m, p.order()));
  return s;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero() || p.leading_coeff().is_one()) return p;
  return p.scaled(p.leading_coeff().inverse());
}

// Full reduction of every term of p by the polynomials in basis.
Poly reduce_by(Poly p, const std::vector<Poly>& basis) {
  Poly rem(p.order());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const GaussianRational lc = p.leading_coeff();
    const Poly* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
      continue;
    }
    const Monomial shift = divisor->leading_monomial().quotient_of(lm);
    p -= divisor->shifted(shift).scaled(lc / divisor->leading_coeff());
  }
  return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Poly a = f.shifted(f.leading_monomial().quotient_of(l)).scaled(f.leading_coeff().inverse());
  Poly b = g.shifted(g.leading_monomial().quotient_of(l)).scaled(g.leading_coeff().inverse());
  return a - b;
}

struct Pair {
  int sugar;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord) {
  std::vector<Poly> basis;
  std::vector<int> sugar;
  for (const auto& g : gens) {
    Poly p = g.with_order(ord);
    if (p.is_zero()) continue;
    basis.push_back(make_monic(p));
    sugar.push_back(poly_sugar(p));
  }
  GroebnerBasis out{{}, ord};
  if (basis.empty()) return out;  // zero ideal; callers treat the quotient as infinite

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    const Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
    const int s = std::max(sugar[i] + sugar_degree(l, ord) - sugar_degree(basis[i].leading_monomial(), ord),
                           sugar[j] + sugar_degree(l, ord) - sugar_degree(basis[j].leading_monomial(), ord));
    pending.push_back({s, l, i, j});
    pending_keys.insert({i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      auto c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.j, a.i) < std::pair(b.j, b.i);
    });
    const Pair pr = *best;
    pending.erase(best);
    pending_keys.erase({pr.i, pr.j});

    const Monomial& li = basis[pr.i].leading_monomial();
    const Monomial& lj = basis[pr.j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::pair(a, b) : std::pair(b, a); };
      chain = !pending_keys.count(key(pr.i, k)) && !pending_keys.count(key(pr.j, k));
    }
    if (chain) continue;

    Poly h = reduce_by(s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(h));
    sugar.push_back(pr.sugar);
    const std::size_t n = basis.size() - 1;
    for (std::size_t i = 0; i < n; ++i) add_pair(i, n);
  }

  // Minimalize: drop generators whose leading monomial is divisible by another's.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].leading_monomial();
      const Monomial& li = basis[i].leading_monomial();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Inter-reduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Monomial lm = minimal[i].leading_monomial();
    Poly tail = minimal[i];
    tail.add_term(lm, -tail.leading_coeff());
    Poly reduced = reduce_by(tail, others);
    reduced.add_term(lm, GaussianRational(1));
    minimal[i] = reduced;
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  out.generators = std::move(minimal);
  return out;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  return reduce_by(p.with_order(gb.order), gb.generators);
}

std::vector<Monomial> staircase_basis(const GroebnerBasis& gb) {
  const auto lms = gb.leading_monomials();
  if (gb.is_unit_ideal()) return {};
  std::array<unsigned, kNumVars> bound{};
  for (int v = 0; v < kNumVars; ++v) {
    bool found = false;
    for (const auto& m : lms) {
      if (m.pure_power_var() == v) {
        bound[v] = found ? std::min(bound[v], m[v]) : m[v];
        found = true;
      }
    }
    if (!found) {
      throw InfiniteQuotientError(
          v, "quotient is infinite-dimensional: no pure power of " + kFloerNames[v] +
                 " among the leading monomials");
    }
  }
  std::vector<Monomial> out;
  for (unsigned a = 0; a < bound[0]; ++a)
    for (unsigned b = 0; b < bound[1]; ++b)
      for (unsigned c = 0; c < bound[2]; ++c) {
        Monomial m{{a, b, c}};
        bool in_ideal = std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
        if (!in_ideal) out.push_back(m);
      }
  const auto grlex = MonomialOrder::grlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
    if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
    return grlex.compare(x, y) > 0;
  });
  return out;
}

QuotientRing::QuotientRing(GroebnerBasis gb) : gb_(std::move(gb)) {
  if (gb_.generators.empty())
    throw InfiniteQuotientError(0, "quotient by the zero ideal is infinite-dimensional");
  basis_ = staircase_basis(gb_);
  for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k].e] = k;
  for (int v = 0; v < kNumVars; ++v) {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Poly prod = Poly::term(basis_[j] * Monomial::var(static_cast<Var>(v)), GaussianRational(1), gb_.order);
      m.set_column(j, coordinates(prod));
    }
    mult_[v] = std::move(m);
  }
}

QuotientRing QuotientRing::from_generators(const std::vector<Poly>& gens, const MonomialOrder& ord) {
  return QuotientRing(buchberger(gens, ord));
}

Vector QuotientRing::coordinates(const Poly& p) const {
  Vector v(dim());
  const Poly nf = reduce(p);
  for (const auto& [m, c] : nf.terms()) v[index_.at(m.e)] = c;
  return v;
}

Poly QuotientRing::element(const Vector& coords) const {
  Poly p(gb_.order);
  for (std::size_t k = 0; k < coords.size(); ++k) p.add_term(basis_[k], coords[k]);
  return p;
}

Matrix QuotientRing::mult_matrix(const Poly& p) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, coordinates(p.shifted(basis_[j])));
  return m;
}

Matrix mult_matrix(const QuotientRing& ring, Var v) { return ring.mult_matrix(v); }

unsigned EigenReport::multiplicity(const GaussianRational& x) const {
  for (const auto& [r, k] : roots)
    if (r == x) return k;
  return 0;
}

std::vector<GaussianRational> EigenReport::multiset() const {
  std::vector<GaussianRational> out;
  for (const auto& [r, k] : roots)
    for (unsigned j = 0; j < k; ++j) out.push_back(r);
  return out;
}

std::string EigenReport::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [r, k] : roots) {
    os << (first ? "" : ", ") << r;
    if (k > 1) os << "^" << k;
    first = false;
  }
  os << "}";
  if (!fully_factored()) os << " remainder " << remainder.to_string();
  return os.str();
}

EigenReport factor_over_candidates(const UniPoly& cp, const std::vector<GaussianRational>& candidates) {
  if (!cp.is_monic()) throw std::invalid_argument("factor_over_candidates expects a monic polynomial");
  EigenReport rep;
  UniPoly rest = cp;
  for (const auto& c : candidates) {
    unsigned k = 0;
    while (rest.divide_root(c)) ++k;
    if (k > 0) rep.roots.emplace_back(c, k);
  }
  rep.remainder = rest;
  return rep;
}

std::vector<GaussianRational> spectrum_candidates(int bound) {
  std::set<GaussianRational> s;
  for (int k = -bound; k <= bound; ++k) {
    s.insert(GaussianRational(4L * k));
    s.insert(GaussianRational(Rational(0), Rational(4L * k)));
  }
  s.insert(GaussianRational(8));
  s.insert(GaussianRational(-8));
  s.insert(GaussianRational(0));
  return {s.begin(), s.end()};
}

EigenReport eigen_report(const Matrix& m, int bound) {
  return factor_over_candidates(char_poly(m), spectrum_candidates(bound));
}

}  // namespace floercas
