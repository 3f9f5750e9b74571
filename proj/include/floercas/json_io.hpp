#pragma once

#include "floercas/donaldson.hpp"
#include "floercas/floer.hpp"
#include "floercas/fukaya.hpp"

#include <json.hpp>

namespace floercas {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& x);
Json to_json(const TruncatedSeries& s);
Json to_json(const Poly& p);
Json to_json(const Matrix& m);
Json to_json(const UniPoly& p);
Json to_json(const EigenReport& e);
Json to_json(const Monomial& m);

GaussianRational scalar_from_json(const Json& j);
TruncatedSeries series_from_json(const Json& j);

/// Groebner basis, staircase and dimension.
Json ring_json(const QuotientRing& ring, const VarNames& names = kFloerNames);
/// Ring summary plus the spectra of the three generators.
Json ring_json_with_spectra(const QuotientRing& ring, int spectrum_bound);
Json to_json(const RelationTriple& t);
Json to_json(const FloerRing& hf, int spectrum_bound);
Json to_json(const SubquotientModule& m);

Json to_json(const RhffModule& m);
Json to_json(const std::vector<EffectiveEigenvalue>& v);
Json to_json(const DeltaHffModule& m);

Json to_json(const DonaldsonSeries& s);
/// Accepts {"basis":[..], "Q":[[..]], "terms":[{"a":"p/q","K":[..]}], "simple_type":bool}.
/// "basis" defaults to E, F, ... when absent; "simple_type" defaults to true.
DonaldsonSeries donaldson_from_json(const Json& j);
Json to_json(const CongruenceReport& r);

/// Gluing data for a fiber sum: {"genus", "basis", "Q", "sigma", "sigma_a", "sigma_b", "P1", "P2"}.
/// The two series are supplied separately; "genus" defaults to 1.
FiberSumInput fiber_input_from_json(const Json& j, DonaldsonSeries a, DonaldsonSeries b);

}  // namespace floercas
