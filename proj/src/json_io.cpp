#include "floercas/json_io.hpp"

#include <stdexcept>

namespace floercas {

namespace {

std::string rat(const Rational& q) { return q.get_str(); }

Json int_vector(const IntVector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

IntVector int_vector_from(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of integers");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + " must contain integers");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

IntMatrix int_matrix_from(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of rows");
  IntMatrix m;
  for (const auto& row : j) m.push_back(int_vector_from(row, what));
  return m;
}

Json int_matrix(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(int_vector(row));
  return a;
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected a rational as a string \"p/q\" or an integer");
}

}  // namespace

Json to_json(const GaussianRational& x) { return Json{{"re", rat(x.re())}, {"im", rat(x.im())}}; }

Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

Json to_json(const Monomial& m) { return Json::array({m[0], m[1], m[2]}); }

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"m", to_json(m)}, {"c", to_json(c)}});
  return Json{{"order", p.order().name()}, {"terms", terms}};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs_low_first", coeffs}, {"text", p.to_string()}};
}

Json to_json(const EigenReport& e) {
  Json roots = Json::array();
  for (const auto& [r, k] : e.roots) roots.push_back(Json{{"value", to_json(r)}, {"mult", k}});
  return Json{{"roots", roots}, {"remainder", to_json(e.remainder)}, {"fully_factored", e.fully_factored()}};
}

GaussianRational scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) throw std::invalid_argument("scalar must be {\"re\":..,\"im\":..}");
  Rational re = rational_from(j.at("re"));
  Rational im = j.contains("im") ? rational_from(j.at("im")) : Rational(0);
  return GaussianRational(re, im);
}

TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw std::invalid_argument("series must carry \"coeffs\"");
  std::vector<GaussianRational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(scalar_from_json(x));
  const std::size_t order = j.contains("order") ? j.at("order").get<std::size_t>() : c.size();
  return TruncatedSeries(std::move(c), order);
}

Json ring_json(const QuotientRing& ring, const VarNames& names) {
  Json gens = Json::array();
  for (const auto& g : ring.gb().generators) gens.push_back(g.to_string(names));
  Json stair = Json::array();
  for (const auto& m : ring.basis()) stair.push_back(to_json(m));
  return Json{{"monomial_order", ring.gb().order.name()},
              {"groebner_basis", gens},
              {"dim", ring.dim()},
              {"staircase", stair}};
}

Json ring_json_with_spectra(const QuotientRing& ring, int spectrum_bound) {
  Json j = ring_json(ring);
  Json spectra = Json::object();
  for (int v = 0; v < kNumVars; ++v)
    spectra[kFloerNames[v]] = to_json(eigen_report(ring.mult_matrix(static_cast<Var>(v)), spectrum_bound));
  j["spectra"] = spectra;
  return j;
}

Json to_json(const RelationTriple& t) {
  const VarNames& names = t.flavor == Flavor::Classical ? kClassicalNames : kFloerNames;
  Json polys = Json::array();
  for (const auto& p : t.p) {
    Json pj = to_json(p);
    pj["text"] = p.to_string(names);
    pj["mod4_degree"] = p.mod4_degree().to_string();
    polys.push_back(pj);
  }
  return Json{{"flavor", flavor_name(t.flavor)}, {"r", t.r}, {"variables", names}, {"relations", polys}};
}

Json to_json(const FloerRing& hf, int spectrum_bound) {
  Json summands = Json::array();
  for (const auto& s : hf.summands) {
    Json j{{"k", s.k}, {"multiplicity", s.multiplicity}, {"r", hf.genus - s.k}};
    Json rels = Json::array();
    for (const auto& p : relations(Flavor::Floer, hf.genus - s.k).p) rels.push_back(p.to_string());
    j["relations"] = rels;
    Json ring = ring_json_with_spectra(s.ring, spectrum_bound);
    for (auto it = ring.begin(); it != ring.end(); ++it) j[it.key()] = it.value();
    summands.push_back(j);
  }
  return Json{{"genus", hf.genus}, {"summands", summands}, {"total_dim", hf.total_dim}};
}

Json to_json(const SubquotientModule& m) {
  Json actions = Json::object();
  Json eigen = Json::object();
  for (int v = 0; v < kNumVars; ++v) {
    actions[kFloerNames[v]] = to_json(m.action[v]);
    eigen[kFloerNames[v]] = to_json(m.eigen[v]);
  }
  return Json{{"name", m.name},
              {"ambient_dim", m.ambient_dim},
              {"dim", m.dim()},
              {"denominator_dim", m.denominator_basis.size()},
              {"action", actions},
              {"spectra", eigen}};
}

Json to_json(const RhffModule& m) {
  Json comps = Json::array();
  for (const auto& c : m.components)
    comps.push_back(Json{{"i", c.i}, {"alpha", to_json(c.alpha)}, {"beta", to_json(c.beta)}});
  return Json{{"genus", m.genus}, {"n", m.n}, {"rank", m.components.size()}, {"components", comps}};
}

Json to_json(const std::vector<EffectiveEigenvalue>& v) {
  Json out = Json::array();
  for (const auto& e : v)
    out.push_back(Json{{"alpha", to_json(e.alpha)}, {"beta", to_json(e.beta)}, {"gamma", to_json(e.gamma)}});
  return out;
}

Json to_json(const DeltaHffModule& m) {
  Json comps = Json::array();
  for (const auto& c : m.components)
    comps.push_back(Json{{"k", c.k},
                         {"i", c.i},
                         {"mult", c.multiplicity},
                         {"alpha", to_json(c.alpha)},
                         {"beta", to_json(c.beta)}});
  return Json{{"genus", m.genus}, {"total_rank", m.total_rank()}, {"components", comps}};
}

Json to_json(const DonaldsonSeries& s) {
  Json terms = Json::array();
  for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it)
    terms.push_back(Json{{"a", rat(it->second)}, {"K", int_vector(it->first)}});
  return Json{{"basis", s.basis_names}, {"Q", int_matrix(s.Q)}, {"terms", terms}, {"simple_type", s.simple_type}};
}

DonaldsonSeries donaldson_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("Donaldson series must be a JSON object");
  DonaldsonSeries s;
  if (!j.contains("Q")) throw std::invalid_argument("Donaldson series needs an intersection form \"Q\"");
  s.Q = int_matrix_from(j.at("Q"), "Q");
  if (j.contains("basis")) {
    for (const auto& n : j.at("basis")) s.basis_names.push_back(n.get<std::string>());
  } else {
    for (std::size_t k = 0; k < s.Q.size(); ++k)
      s.basis_names.push_back(k < 2 ? std::string(1, static_cast<char>('E' + k)) : "e" + std::to_string(k));
  }
  if (j.contains("simple_type")) s.simple_type = j.at("simple_type").get<bool>();
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      if (!t.contains("a") || !t.contains("K")) throw std::invalid_argument("each term needs \"a\" and \"K\"");
      s.add_term(int_vector_from(t.at("K"), "K"), rational_from(t.at("a")));
    }
  }
  s.validate();
  return s;
}

Json to_json(const CongruenceReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(Json{{"K", int_vector(v.K)}, {"K_dot_sigma", v.pairing}, {"ok", v.ok}});
  return Json{{"genus", r.genus},
              {"sigma", int_vector(r.sigma)},
              {"target_mod4", ((2 * r.genus - 2) % 4 + 4) % 4},
              {"classes", verdicts},
              {"passed", r.passed()}};
}

FiberSumInput fiber_input_from_json(const Json& j, DonaldsonSeries a, DonaldsonSeries b) {
  if (!j.is_object()) throw std::invalid_argument("pairing data must be a JSON object");
  for (const char* key : {"Q", "sigma", "sigma_a", "sigma_b", "P1", "P2"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("pairing data is missing \"") + key + "\"");
  FiberSumInput in;
  in.a = std::move(a);
  in.b = std::move(b);
  in.genus = j.value("genus", 1);
  in.Q = int_matrix_from(j.at("Q"), "Q");
  if (j.contains("basis")) {
    for (const auto& n : j.at("basis")) in.basis_names.push_back(n.get<std::string>());
  } else {
    for (std::size_t k = 0; k < in.Q.size(); ++k) in.basis_names.push_back("e" + std::to_string(k));
  }
  in.sigma = int_vector_from(j.at("sigma"), "sigma");
  in.sigma_a = int_vector_from(j.at("sigma_a"), "sigma_a");
  in.sigma_b = int_vector_from(j.at("sigma_b"), "sigma_b");
  in.P1 = int_matrix_from(j.at("P1"), "P1");
  in.P2 = int_matrix_from(j.at("P2"), "P2");
  validate_fiber_input(in);
  return in;
}

}  // namespace floercas
