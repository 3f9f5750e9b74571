#include "floercas/floer.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace floercas {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Classical:
      return "q";
    case Flavor::Floer:
      return "R";
    case Flavor::Reduced:
      return "Rbar";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "q") return Flavor::Classical;
  if (s == "R") return Flavor::Floer;
  if (s == "Rbar") return Flavor::Reduced;
  throw std::invalid_argument("unknown relation flavor '" + s + "' (expected q, R or Rbar)");
}

std::vector<Poly> RelationTriple::generators() const { return {p[0], p[1], p[2]}; }

RelationTriple relations(Flavor flavor, int r, const MonomialOrder& ord) {
  if (r < 0) throw std::invalid_argument("relations: level must be non-negative");
  RelationTriple t;
  t.r = r;
  t.flavor = flavor;
  t.p = {poly_constant(GaussianRational(1), ord), Poly(ord), Poly(ord)};
  const Poly x = poly_var(Var::A, ord);
  const Poly y = poly_var(Var::B, ord);
  const Poly z = poly_var(Var::C, ord);
  for (int s = 0; s < r; ++s) {
    const long sign = (s % 2 == 0) ? -1 : 1;  // (-1)^{s+1}
    const GaussianRational shift = flavor == Flavor::Classical ? GaussianRational(0) : GaussianRational(8 * sign);
    const GaussianRational sq(static_cast<long>(s) * s);
    const GaussianRational frac(Rational(2L * s, static_cast<unsigned long>(s + 1)));
    Poly p1 = x * t.p[0] + t.p[1].scaled(sq);
    Poly p2 = (y + poly_constant(shift, ord)) * t.p[0];
    if (flavor != Flavor::Reduced) p2 += t.p[2].scaled(frac);
    Poly p3 = flavor == Flavor::Reduced ? Poly(ord) : z * t.p[0];
    t.p = {std::move(p1), std::move(p2), std::move(p3)};
  }
  return t;
}

QuotientRing build_F(int r, const MonomialOrder& ord) {
  return QuotientRing::from_generators(relations(Flavor::Floer, r, ord).generators(), ord);
}

QuotientRing build_Fbar(int r, const MonomialOrder& ord) {
  auto gens = relations(Flavor::Reduced, r, ord).generators();
  gens.push_back(poly_var(Var::C, ord));
  return QuotientRing::from_generators(gens, ord);
}

QuotientRing build_classical(int r, const MonomialOrder& ord) {
  return QuotientRing::from_generators(relations(Flavor::Classical, r, ord).generators(), ord);
}

std::vector<Monomial> expected_basis_monomials(int r, bool with_gamma) {
  std::vector<Monomial> out;
  for (int a = 0; a < r; ++a)
    for (int b = 0; a + b < r; ++b)
      for (int c = 0; a + b + c < r && (with_gamma || c == 0); ++c)
        out.push_back(Monomial{{static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(c)}});
  return out;
}

bool is_exact_basis(const QuotientRing& ring, const std::vector<Monomial>& monomials) {
  if (monomials.size() != ring.dim()) return false;
  std::vector<Vector> cols;
  cols.reserve(monomials.size());
  for (const auto& m : monomials)
    cols.push_back(ring.coordinates(Poly::term(m, GaussianRational(1), ring.gb().order)));
  return span_rank(cols, ring.dim()) == ring.dim();
}

SubquotientModule make_subquotient(const QuotientRing& ring, const std::vector<Vector>& numerator_span,
                                   const std::vector<Vector>& denominator_span, int spectrum_bound,
                                   std::string name) {
  const std::size_t n = ring.dim();
  SubquotientModule mod;
  mod.name = std::move(name);
  mod.ambient_dim = n;

  const std::size_t num_rank = span_rank(numerator_span, n);
  std::vector<Vector> both = denominator_span;
  both.insert(both.end(), numerator_span.begin(), numerator_span.end());
  if (span_rank(both, n) != num_rank)
    throw FalsificationError(mod.name + ": denominator is not contained in numerator");

  if (!both.empty()) {
    Echelon e = row_reduce(Matrix::from_columns(both, n));
    for (std::size_t p : e.pivots) {
      if (p < denominator_span.size())
        mod.denominator_basis.push_back(denominator_span[p]);
      else
        mod.quotient_basis.push_back(numerator_span[p - denominator_span.size()]);
    }
  }

  std::vector<Vector> full = mod.denominator_basis;
  full.insert(full.end(), mod.quotient_basis.begin(), mod.quotient_basis.end());
  const std::size_t offset = mod.denominator_basis.size();
  const std::size_t d = mod.dim();
  for (int v = 0; v < kNumVars; ++v) {
    Matrix act(d, d);
    const Matrix& mv = ring.mult_matrix(static_cast<Var>(v));
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = solve_in_span(full, mv * mod.quotient_basis[j]);
      if (!coords)
        throw FalsificationError(mod.name + ": not stable under multiplication by " + kFloerNames[v]);
      for (std::size_t i = 0; i < d; ++i) act(i, j) = (*coords)[offset + i];
    }
    mod.eigen[v] = eigen_report(act, spectrum_bound);
    mod.action[v] = std::move(act);
  }
  return mod;
}

std::pair<GaussianRational, GaussianRational> lattice_eigenpair(int i) {
  if (i % 2 == 0) return {GaussianRational(Rational(0), Rational(4L * i)), GaussianRational(8)};
  return {GaussianRational(4L * i), GaussianRational(-8)};
}

namespace {

// Span of the image of the ideal (gens) inside ring: NF(b * g) over staircase b.
std::vector<Vector> ideal_image(const QuotientRing& ring, const std::vector<Poly>& gens,
                                const Poly& multiplier) {
  std::vector<Vector> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const Poly gm = (g * multiplier).with_order(ring.gb().order);
    for (const auto& b : ring.basis()) out.push_back(ring.coordinates(gm.shifted(b)));
  }
  return out;
}

std::vector<Poly> floer_ideal_generators(int r) {
  if (r < 0) return {poly_constant(GaussianRational(1))};
  return relations(Flavor::Floer, r).generators();
}

}  // namespace

SubquotientModule filtration_step(int r) {
  if (r < 0) throw std::invalid_argument("filtration_step: r must be non-negative");
  const QuotientRing ring = build_Fbar(r + 1);
  auto gens = relations(Flavor::Reduced, r).generators();
  auto num = ideal_image(ring, gens, poly_constant(GaussianRational(1)));
  return make_subquotient(ring, num, {}, r + 2, "Jbar_" + std::to_string(r) + "/Jbar_" + std::to_string(r + 1));
}

SubquotientModule build_K(int r) {
  if (r < 1) throw std::invalid_argument("build_K: r must be at least 1");
  const QuotientRing ring = build_F(r);
  auto num = ideal_image(ring, floer_ideal_generators(r - 1), poly_constant(GaussianRational(1)));
  auto den = ideal_image(ring, floer_ideal_generators(r - 2), poly_var(Var::C));
  return make_subquotient(ring, num, den, r + 1, "K_" + std::to_string(r));
}

SubquotientModule build_K_via_kernels(int r) {
  if (r < 1) throw std::invalid_argument("build_K_via_kernels: r must be at least 1");
  const QuotientRing ring = build_F(r);
  const Matrix& g = ring.mult_matrix(Var::C);
  auto ker1 = kernel_rank(g).kernel_basis;
  auto ker2 = kernel_rank(g * g).kernel_basis;
  std::vector<Vector> den;
  den.reserve(ker2.size());
  for (const auto& v : ker2) den.push_back(g * v);
  return make_subquotient(ring, ker1, den, r + 1, "ker(gamma)/gamma ker(gamma^2) in F_" + std::to_string(r));
}

QuotientRing filtration_quotient(int r) {
  if (r < 0) throw std::invalid_argument("filtration_quotient: r must be non-negative");
  auto gens = relations(Flavor::Floer, r + 1).generators();
  const long sign = (r % 2 == 0) ? -1 : 1;
  gens.push_back(poly_var(Var::B) + poly_constant(GaussianRational(8 * sign)));
  gens.push_back(poly_var(Var::C));
  return QuotientRing::from_generators(gens);
}

UniPoly filtration_quotient_charpoly(int r) {
  UniPoly p = UniPoly::constant(GaussianRational(1));
  if (r % 2 == 0) {
    p = p * UniPoly({GaussianRational(0), GaussianRational(1)});
    for (long j = 2; j <= r; j += 2) p = p * UniPoly({GaussianRational(16 * j * j), GaussianRational(0), GaussianRational(1)});
  } else {
    for (long j = 1; j <= r; j += 2) p = p * UniPoly({GaussianRational(-16 * j * j), GaussianRational(0), GaussianRational(1)});
  }
  return p;
}

QuotientRing reduced_quotient(int g) {
  if (g < 1) throw std::invalid_argument("reduced_quotient: genus must be at least 1");
  auto gens = relations(Flavor::Floer, g).generators();
  gens.push_back(poly_var(Var::C));
  gens.push_back(poly_var(Var::B) * poly_var(Var::B) - poly_constant(GaussianRational(64)));
  return QuotientRing::from_generators(gens);
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out.get_si();
}

long primitive_dim(int g, int k) {
  if (g < 0 || k < 0 || k > g) throw std::invalid_argument("primitive_dim requires 0 <= k <= g");
  return binomial(2L * g, k) - binomial(2L * g, k - 2);
}

namespace {

using Mask = unsigned;

std::vector<Mask> wedge_basis(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

// Sign of e_a ^ e_S relative to the sorted wedge of S u {a}, or 0 when a is in S.
int insert_sign(Mask s, int a) {
  if (s & (Mask{1} << a)) return 0;
  return (std::popcount(s & ((Mask{1} << a) - 1)) % 2) ? -1 : 1;
}

// Matrix of wedging with c = -2 sum_{i<g} psi_i psi_{i+g} from degree k to k+2.
Matrix wedge_c(int g, int k) {
  const int n = 2 * g;
  const auto src = wedge_basis(n, k);
  const auto dst = wedge_basis(n, k + 2);
  std::map<Mask, std::size_t> dst_index;
  for (std::size_t j = 0; j < dst.size(); ++j) dst_index[dst[j]] = j;
  Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (int i = 0; i < g; ++i) {
      const int a = i;
      const int b = i + g;
      // psi_a ^ psi_b ^ e_S
      const int s1 = insert_sign(src[j], b);
      if (s1 == 0) continue;
      const Mask with_b = src[j] | (Mask{1} << b);
      const int s2 = insert_sign(with_b, a);
      if (s2 == 0) continue;
      const Mask target = with_b | (Mask{1} << a);
      m(dst_index.at(target), j) += GaussianRational(-2L * s1 * s2);
    }
  }
  return m;
}

}  // namespace

long primitive_dim_exact(int g, int k) {
  if (g < 0 || k < 0 || k > g) throw std::invalid_argument("primitive_dim_exact requires 0 <= k <= g");
  const int n = 2 * g;
  const std::size_t src_dim = wedge_basis(n, k).size();
  Matrix total = Matrix::identity(src_dim);
  int deg = k;
  for (int step = 0; step < g - k + 1; ++step) {
    if (deg + 2 > n) return static_cast<long>(src_dim);  // lands in a zero space
    total = wedge_c(g, deg) * total;
    deg += 2;
  }
  return static_cast<long>(kernel_rank(total).kernel_basis.size());
}

FloerRing hf_assemble(int g, bool invariant_only) {
  if (g < 1) throw std::invalid_argument("hf_assemble: genus must be at least 1");
  FloerRing out;
  out.genus = g;
  for (int k = 0; k <= (invariant_only ? 0 : g); ++k) {
    FloerSummand s;
    s.k = k;
    s.multiplicity = invariant_only ? 1 : primitive_dim(g, k);
    s.ring = build_F(g - k);
    out.total_dim += s.multiplicity * static_cast<long>(s.ring.dim());
    out.summands.push_back(std::move(s));
  }
  return out;
}

std::pair<std::size_t, std::size_t> gamma_kernel_dims(int r) {
  if (r < 1) throw std::invalid_argument("gamma_kernel_dims: r must be at least 1");
  const QuotientRing ring = build_F(r);
  const Matrix& g = ring.mult_matrix(Var::C);
  return {kernel_rank(g).kernel_basis.size(), kernel_rank(g * g).kernel_basis.size()};
}

std::vector<Psi1Entry> psi1_homology_dims(int g) {
  if (g < 1) throw std::invalid_argument("psi1_homology_dims: genus must be at least 1");
  std::vector<Psi1Entry> out;
  for (int k = 0; k <= g - 1; ++k) {
    Psi1Entry e;
    e.k = k;
    e.multiplicity = binomial(2L * g - 2, k) - binomial(2L * g - 2, k - 2);
    e.dim_K = build_K(g - k).dim();
    out.push_back(e);
  }
  return out;
}

long psi1_homology_total(const std::vector<Psi1Entry>& entries) {
  long total = 0;
  for (const auto& e : entries) total += e.multiplicity * static_cast<long>(e.dim_K);
  return total;
}

}  // namespace floercas
