#include "cli.hpp"

#include "floercas/donaldson.hpp"
#include "floercas/errors.hpp"
#include "floercas/floer.hpp"
#include "floercas/fukaya.hpp"
#include "floercas/json_io.hpp"
#include "floercas/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace floercas {

namespace {

// Bad user input that parsed syntactically (unknown class name, wrong vector length, ...).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "json";
  std::size_t trunc = kDefaultTruncation;
  bool json() const { return format == "json"; }
};

// Genus above which the t = 0 cross checks in rhff/delta are skipped (they need F_g).
constexpr int kCrossCheckGenus = 6;

IntVector parse_int_vector(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
  IntVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer vector: '" + s + "'");
    }
    if (used != item.size()) throw UsageError("not an integer vector: '" + s + "'");
    v.push_back(x);
  }
  if (v.empty()) throw UsageError("empty integer vector");
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in;
  std::istream* src = &std::cin;
  if (path != "-") {
    in.open(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    src = &in;
  }
  try {
    return Json::parse(*src);
  } catch (const Json::parse_error& e) {
    throw UsageError("invalid JSON in '" + path + "': " + e.what());
  }
}

DonaldsonSeries read_series(const std::string& path) {
  try {
    return donaldson_from_json(read_json_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

// "[c*]name[:j]" terms joined by '+', for the homology of Sigma_g x S^1.
YHomologyClass parse_class(const std::string& spec, int g) {
  if (spec.empty()) throw UsageError("empty homology class");
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ' ') continue;
    if (ch == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);

  std::optional<YHomologyClass> total;
  for (const auto& part : parts) {
    if (part.empty()) throw UsageError("empty term in class '" + spec + "'");
    long coeff = 1;
    std::string rest = part;
    if (auto star = part.find('*'); star != std::string::npos) {
      try {
        std::size_t used = 0;
        coeff = std::stol(part.substr(0, star), &used);
        if (used != star) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw UsageError("bad coefficient in '" + part + "'");
      }
      rest = part.substr(star + 1);
    } else if (!rest.empty() && rest[0] == '-') {
      coeff = -1;
      rest = rest.substr(1);
    }
    std::string name = rest;
    int index = 0;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      name = rest.substr(0, colon);
      try {
        std::size_t used = 0;
        index = std::stoi(rest.substr(colon + 1), &used);
        if (used != rest.size() - colon - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw UsageError("bad index in '" + part + "'");
      }
      if (index < 1 || index > 2 * g)
        throw UsageError("index in '" + part + "' must lie in 1.." + std::to_string(2 * g));
    }
    const bool indexed = name == "gamma" || name == "torus";
    if (indexed != (rest.find(':') != std::string::npos))
      throw UsageError(indexed ? "'" + name + "' needs an index, e.g. " + name + ":1"
                               : "'" + name + "' takes no index");
    YHomologyClass term;
    if (name == "pt") {
      term = YHomologyClass::zero(g, 0);
      term.point_mult = 1;
    } else if (name == "S1") {
      term = YHomologyClass::zero(g, 1);
      term.circle_coeff = 1;
    } else if (name == "gamma") {
      term = YHomologyClass::zero(g, 1);
      term.surface_coeffs[index - 1] = 1;
    } else if (name == "Sigma") {
      term = YHomologyClass::zero(g, 2);
      term.sigma_coeff = 1;
    } else if (name == "torus") {
      term = YHomologyClass::zero(g, 2);
      term.torus_coeffs[index - 1] = 1;
    } else {
      throw UsageError("unknown class '" + name + "' (expected pt, S1, gamma:j, Sigma, torus:j)");
    }
    term = term.scaled(coeff);
    if (total && total->grade != term.grade) throw UsageError("class '" + spec + "' mixes grades");
    total = total ? *total + term : term;
  }
  return *total;
}

std::string vec_text(const IntVector& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

void emit(std::ostream& out, const Globals& gl, const Json& j, const std::string& text) {
  if (gl.json())
    out << j.dump(2) << "\n";
  else
    out << text;
}

std::string series_text(const DonaldsonSeries& s) {
  std::ostringstream os;
  os << "basis";
  for (const auto& n : s.basis_names) os << " " << n;
  os << "\nQ";
  for (const auto& row : s.Q) os << " " << vec_text(row);
  os << "\n";
  if (s.terms.empty()) os << "(no basic classes)\n";
  for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it)
    os << it->second.get_str() << " * exp" << vec_text(it->first) << "\n";
  return os.str();
}

std::string module_text(const SubquotientModule& m) {
  std::ostringstream os;
  os << m.name << ": dim " << m.dim() << " inside a ring of dim " << m.ambient_dim << "\n";
  for (int v = 0; v < kNumVars; ++v) os << "  " << kFloerNames[v] << " " << m.eigen[v].to_string() << "\n";
  return os.str();
}

bool spectra_complete(const std::array<EigenReport, kNumVars>& e) {
  for (const auto& r : e)
    if (!r.fully_factored()) return false;
  return true;
}

std::vector<GaussianRational> sorted_multiset(const EigenReport& e) {
  auto v = e.multiset();
  std::sort(v.begin(), v.end());
  return v;
}

// Expected (alpha, beta) multisets for the lattice pieces |i| <= top, i = top mod 2.
std::pair<std::vector<GaussianRational>, std::vector<GaussianRational>> lattice_spectrum(int top) {
  std::vector<GaussianRational> a, b;
  for (int i = -top; i <= top; i += 2) {
    auto [x, y] = lattice_eigenpair(i);
    a.push_back(x);
    b.push_back(y);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

int cmd_ring(const Globals& gl, std::ostream& out, int genus, bool invariant_only) {
  const FloerRing hf = hf_assemble(genus, invariant_only);
  std::ostringstream os;
  os << "genus " << hf.genus << (invariant_only ? " (invariant part)" : "") << ", total dimension "
     << hf.total_dim << "\n";
  for (const auto& s : hf.summands) {
    os << "k=" << s.k << " multiplicity " << s.multiplicity << " x F_" << genus - s.k << " (dim " << s.ring.dim()
       << ")\n";
    for (int v = 0; v < kNumVars && s.ring.dim() > 0; ++v)
      os << "  " << kFloerNames[v] << " " << eigen_report(s.ring.mult_matrix(static_cast<Var>(v)), genus).to_string()
         << "\n";
  }
  emit(out, gl, to_json(hf, genus), os.str());
  return kExitOk;
}

int cmd_relations(const Globals& gl, std::ostream& out, const std::string& flavor, int r) {
  const RelationTriple t = relations(parse_flavor(flavor), r);
  std::ostringstream os;
  const VarNames& names = t.flavor == Flavor::Classical ? kClassicalNames : kFloerNames;
  for (int k = 0; k < 3; ++k)
    os << flavor << "^" << k + 1 << "_" << r << " = " << t.p[k].to_string(names) << "    [deg mod 4: "
       << t.p[k].mod4_degree().to_string() << "]\n";
  emit(out, gl, to_json(t), os.str());
  return kExitOk;
}

int cmd_eigen(const Globals& gl, std::ostream& out, std::ostream& err, int r, const std::string& object) {
  const int bound = r + 1;
  if (object == "F" || object == "Fbar") {
    const QuotientRing ring = object == "F" ? build_F(r) : build_Fbar(r);
    std::ostringstream os;
    os << object << "_" << r << ": dim " << ring.dim() << "\n";
    std::array<EigenReport, kNumVars> e;
    for (int v = 0; v < kNumVars; ++v) {
      e[v] = eigen_report(ring.mult_matrix(static_cast<Var>(v)), bound);
      os << "  " << kFloerNames[v] << " " << e[v].to_string() << "\n";
    }
    Json j = ring_json_with_spectra(ring, bound);
    j["object"] = object;
    j["r"] = r;
    emit(out, gl, j, os.str());
    if (!spectra_complete(e)) {
      err << "falsified: characteristic polynomial does not split over the expected eigenvalues\n";
      return kExitFalsified;
    }
    return kExitOk;
  }
  if (object != "filtration" && object != "K") throw UsageError("unknown object '" + object + "'");
  if (object == "K" && r < 1) throw UsageError("K needs --r >= 1");
  const SubquotientModule m = object == "K" ? build_K(r) : filtration_step(r);
  const int top = object == "K" ? r - 1 : r;
  const std::size_t want_dim = object == "K" ? static_cast<std::size_t>(r) : static_cast<std::size_t>(r + 1);
  const auto [wa, wb] = lattice_spectrum(top);
  std::vector<std::string> problems;
  if (m.dim() != want_dim) problems.push_back("dimension " + std::to_string(m.dim()) + ", expected " +
                                              std::to_string(want_dim));
  if (!spectra_complete(m.eigen)) problems.push_back("characteristic polynomial does not split");
  if (sorted_multiset(m.eigen_of(Var::A)) != wa) problems.push_back("alpha spectrum differs from the lattice");
  if (sorted_multiset(m.eigen_of(Var::B)) != wb) problems.push_back("beta spectrum differs from the lattice");
  if (object == "K" && !m.action_of(Var::C).is_zero()) problems.push_back("gamma acts nontrivially");
  Json j = to_json(m);
  j["object"] = object;
  j["r"] = r;
  j["verified"] = problems.empty();
  emit(out, gl, j, module_text(m));
  for (const auto& p : problems) err << "falsified: " << p << "\n";
  return problems.empty() ? kExitOk : kExitFalsified;
}

int cmd_rhff(const Globals& gl, std::ostream& out, std::ostream& err, int genus, int n) {
  const RhffModule m = rhff(genus, n, gl.trunc);
  std::string why;
  const bool checked = genus <= kCrossCheckGenus;
  if (checked) why = rhff_mismatch(genus, n);
  Json j = to_json(m);
  j["t0_check"] = checked ? (why.empty() ? "agrees with F_g/(gamma, beta^2-64)" : why) : "skipped";
  std::ostringstream os;
  os << "reduced module, genus " << genus << ", n = " << n << ", rank " << m.components.size() << "\n";
  for (const auto& c : m.components)
    os << "  i=" << c.i << ": alpha = " << c.alpha.to_string() << ", beta = " << c.beta << "\n";
  os << "t=0 check: " << (checked ? (why.empty() ? "ok" : why) : "skipped") << "\n";
  emit(out, gl, j, os.str());
  if (!why.empty()) {
    err << "falsified: " << why << "\n";
    return kExitFalsified;
  }
  return kExitOk;
}

int cmd_effective(const Globals& gl, std::ostream& out, int genus) {
  const auto v = effective_eigenvalues(genus, gl.trunc);
  std::ostringstream os;
  for (const auto& e : v) os << "(" << e.alpha.to_string() << ", " << e.beta << ", " << e.gamma << ")\n";
  emit(out, gl, Json{{"genus", genus}, {"eigenvalues", to_json(v)}}, os.str());
  return kExitOk;
}

int cmd_delta(const Globals& gl, std::ostream& out, std::ostream& err, int genus) {
  const DeltaHffModule m = delta_hff(genus);
  Json j = to_json(m);
  std::ostringstream os;
  os << "delta module, genus " << genus << ", total rank " << m.total_rank() << "\n";
  for (const auto& c : m.components)
    os << "  k=" << c.k << " i=" << c.i << " mult " << c.multiplicity << ": alpha " << c.alpha << ", beta "
       << c.beta << "\n";
  bool agree = true;
  if (genus <= kCrossCheckGenus) {
    const long psi = psi1_homology_total(psi1_homology_dims(genus));
    agree = psi == m.total_rank();
    j["psi1_homology_total"] = psi;
    os << "psi_1 homology total " << psi << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  emit(out, gl, j, os.str());
  if (!agree) {
    err << "falsified: delta module rank differs from psi_1 homology\n";
    return kExitFalsified;
  }
  return kExitOk;
}

int cmd_mu(const Globals& gl, std::ostream& out, int genus, int i, const std::string& spec) {
  if (i < -(genus - 1) || i > genus - 1) throw UsageError("--i must satisfy |i| <= genus - 1");
  const YHomologyClass a = parse_class(spec, genus);
  const TruncatedSeries v = mu_action(i, a, genus, gl.trunc);
  const char* what = a.grade == 2 ? "2mu(a)" : (a.grade == 0 ? "-4mu(pt)" : "mu(a)");
  Json j{{"genus", genus}, {"i", i}, {"class", spec}, {"grade", a.grade}, {"quantity", what}, {"value", to_json(v)}};
  emit(out, gl, j, std::string(what) + " = " + v.to_string() + "\n");
  return kExitOk;
}

int cmd_product(const Globals& gl, std::ostream& out, int g, int h) {
  const DonaldsonSeries s = product_series(g, h);
  emit(out, gl, to_json(s), series_text(s));
  return kExitOk;
}

int cmd_eval(const Globals& gl, std::ostream& out, const std::string& file, const std::string& cls,
             std::size_t order) {
  const DonaldsonSeries s = read_series(file);
  const IntVector D = parse_int_vector(cls);
  if (D.size() != s.rank()) throw UsageError("--class must have " + std::to_string(s.rank()) + " entries");
  const TruncatedSeries v = evaluate(s, D, order);
  emit(out, gl, to_json(v), v.to_string() + "\n");
  return kExitOk;
}

int cmd_fibersum(const Globals& gl, std::ostream& out, const std::string& fa, const std::string& fb, int genus,
                 const std::string& pairing) {
  DonaldsonSeries a = read_series(fa);
  DonaldsonSeries b = read_series(fb);
  FiberSumInput in;
  try {
    if (pairing == "E") {
      if (a.rank() != 2 || b.rank() != 2) throw std::invalid_argument("--pairing E needs rank 2 series");
      in = glue_along_first(a, b, genus);
      validate_fiber_input(in);
    } else {
      in = fiber_input_from_json(read_json_file(pairing), a, b);
      in.genus = genus;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const DonaldsonSeries s = fiber_sum(in);
  emit(out, gl, to_json(s), series_text(s));
  return kExitOk;
}

int cmd_order(const Globals& gl, std::ostream& out, int genus, bool b1_zero) {
  const int n = finite_type_order(genus, b1_zero);
  emit(out, gl, Json{{"genus", genus}, {"b1_zero", b1_zero}, {"order", n}},
       "finite type of order <= " + std::to_string(n) + "\n");
  return kExitOk;
}

int cmd_congruence(const Globals& gl, std::ostream& out, std::ostream& err, const std::string& file,
                   const std::string& sigma, int genus) {
  const DonaldsonSeries s = read_series(file);
  const IntVector sv = parse_int_vector(sigma);
  if (sv.size() != s.rank()) throw UsageError("--sigma must have " + std::to_string(s.rank()) + " entries");
  const CongruenceReport rep = congruence_check(s, sv, genus);
  std::ostringstream os;
  for (const auto& v : rep.verdicts)
    os << vec_text(v.K) << " . Sigma = " << v.pairing << (v.ok ? "  ok" : "  FAILS") << "\n";
  os << (rep.passed() ? "all classes satisfy" : "some class violates") << " K.Sigma = " << 2 * genus - 2
     << " mod 4\n";
  emit(out, gl, to_json(rep), os.str());
  if (!rep.passed()) {
    err << "falsified: basic class congruence fails\n";
    return kExitFalsified;
  }
  return kExitOk;
}

int cmd_check(const Globals& gl, std::ostream& out, std::ostream& err, int max_genus) {
  const auto results = run_checks(max_genus);
  int passed = 0;
  Json arr = Json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}});
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << "\n"
       << "      claim: " << r.claim << "\n"
       << "      " << r.detail << "\n";
  }
  const int total = static_cast<int>(results.size());
  os << passed << "/" << total << " verified\n";
  emit(out, gl, Json{{"max_genus", max_genus}, {"criteria", arr}, {"passed", passed}, {"failed", total - passed}},
       os.str());
  if (passed != total) {
    err << total - passed << " claim(s) failed verification\n";
    return kExitFalsified;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra for Floer rings of Sigma x S^1 and Donaldson series", "floercas"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--trunc", gl.trunc, "Truncation order for t-series")->check(CLI::Range(1, 4096));

  int genus = 1;
  int r = 0;
  int n = 1;
  int i = 0;
  int g = 1;
  int h = 1;
  int max_genus = 4;
  std::size_t order = 0;
  bool invariant_only = false;
  bool b1_zero = false;
  std::string flavor, object, cls, file, file_b, pairing, sigma;

  auto genus_opt = [&](CLI::App* sub) {
    return sub->add_option("--genus", genus, "Genus (>= 1)")->required()->check(CLI::Range(1, 64));
  };

  auto* ring = app.add_subcommand("ring", "Assemble the Floer ring HF_g");
  genus_opt(ring);
  ring->add_flag("--invariant-only", invariant_only, "Only the k = 0 summand");

  auto* rel = app.add_subcommand("relations", "Unrolled relation polynomials");
  rel->add_option("--flavor", flavor, "q, R or Rbar")->required()->check(CLI::IsMember({"q", "R", "Rbar"}));
  rel->add_option("--r", r, "Level (>= 0)")->required()->check(CLI::Range(0, 64));

  auto* eig = app.add_subcommand("eigen", "Spectra of a ring or subquotient");
  eig->add_option("--r", r, "Level (>= 0)")->required()->check(CLI::Range(0, 64));
  eig->add_option("--object", object, "F, Fbar, filtration or K")
      ->required()
      ->check(CLI::IsMember({"F", "Fbar", "filtration", "K"}));

  auto* rh = app.add_subcommand("rhff", "Reduced Fukaya-Floer module");
  genus_opt(rh);
  rh->add_option("--n", n, "Loop multiple")->check(CLI::Range(-1000, 1000));

  auto* eff = app.add_subcommand("effective", "Effective eigenvalue table");
  genus_opt(eff);

  auto* del = app.add_subcommand("delta", "Fukaya-Floer module for the loop delta");
  genus_opt(del);

  auto* mu = app.add_subcommand("mu", "Action of a homology class on a delta component");
  genus_opt(mu);
  mu->add_option("--i", i, "Component label")->required();
  mu->add_option("--class", cls, "Class, e.g. Sigma, 2*torus:3, pt")->required();

  auto* don = app.add_subcommand("donaldson", "Donaldson series calculators");
  don->require_subcommand(1);
  auto* prod = don->add_subcommand("product", "Series of Sigma_g x Sigma_h");
  prod->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  prod->add_option("--g", g, "Genus of the first factor")->required()->check(CLI::Range(1, 64));
  prod->add_option("--h", h, "Genus of the second factor")->required()->check(CLI::Range(1, 64));
  auto* ev = don->add_subcommand("eval", "Evaluate a series on e^{tD}");
  ev->add_option("--series", file, "Series JSON file ('-' for stdin)")->required();
  ev->add_option("--class", cls, "Class D as a coordinate vector, e.g. 1,0")->required();
  ev->add_option("--order", order, "Truncation order (defaults to --trunc)")->check(CLI::Range(1, 4096));
  auto* fs = don->add_subcommand("fibersum", "Fiber sum of two series");
  fs->add_option("--a", file, "First series JSON")->required();
  fs->add_option("--b", file_b, "Second series JSON")->required();
  fs->add_option("--genus", genus, "Genus of the gluing surface")->required()->check(CLI::Range(1, 64));
  fs->add_option("--pairing", pairing, "'E' to glue product-type series along E, or a gluing JSON file")
      ->required();
  auto* ord = don->add_subcommand("order", "Finite type order bound");
  ord->add_option("--genus", genus, "Genus (>= 0)")->required()->check(CLI::Range(0, 100000));
  ord->add_flag("--b1-zero", b1_zero, "The manifold has b1 = 0");
  auto* con = don->add_subcommand("congruence", "Basic class congruence check");
  con->add_option("--series", file, "Series JSON file")->required();
  con->add_option("--sigma", sigma, "Class of the surface as a coordinate vector")->required();
  con->add_option("--genus", genus, "Genus of the surface")->required()->check(CLI::Range(1, 64));

  auto* chk = app.add_subcommand("check", "Run the verification suite");
  chk->add_option("--max-genus", max_genus, "Genus bound for genus-indexed checks")->check(CLI::Range(1, 5));

  // CLI11 expects the arguments in reverse order.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ring->parsed()) return cmd_ring(gl, out, genus, invariant_only);
    if (rel->parsed()) return cmd_relations(gl, out, flavor, r);
    if (eig->parsed()) return cmd_eigen(gl, out, err, r, object);
    if (rh->parsed()) return cmd_rhff(gl, out, err, genus, n);
    if (eff->parsed()) return cmd_effective(gl, out, genus);
    if (del->parsed()) return cmd_delta(gl, out, err, genus);
    if (mu->parsed()) return cmd_mu(gl, out, genus, i, cls);
    if (prod->parsed()) return cmd_product(gl, out, g, h);
    if (ev->parsed()) return cmd_eval(gl, out, file, cls, order ? order : gl.trunc);
    if (fs->parsed()) return cmd_fibersum(gl, out, file, file_b, genus, pairing);
    if (ord->parsed()) return cmd_order(gl, out, genus, b1_zero);
    if (con->parsed()) return cmd_congruence(gl, out, err, file, sigma, genus);
    if (chk->parsed()) return cmd_check(gl, out, err, max_genus);
  } catch (const FalsificationError& e) {
    err << "falsified: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace floercas
