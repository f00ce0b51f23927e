#include "harmonium/serialize.hpp"

#include "harmonium/error.hpp"

namespace harmonium {

namespace {

Json rational_list(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

Json integer_list(const std::vector<BigInt>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

}  // namespace

Json to_json(const Polynomial& p) { return rational_list(p.coefficients()); }

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be a JSON array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
  return Polynomial(std::move(c));
}

Json to_json(const Quasipolynomial& q) {
  Json j;
  j["period"] = q.period();
  j["degree"] = q.degree();
  Json constituents = Json::array();
  for (const auto& c : q.constituents()) constituents.push_back(to_json(c));
  j["constituents"] = std::move(constituents);
  return j;
}

Quasipolynomial quasipolynomial_from_json(const Json& j) {
  std::vector<Polynomial> constituents;
  for (const auto& c : j.at("constituents")) constituents.push_back(polynomial_from_json(c));
  if (static_cast<std::int64_t>(constituents.size()) != j.at("period").get<std::int64_t>()) {
    throw DomainError("constituent count differs from period");
  }
  return Quasipolynomial(std::move(constituents), j.at("degree").get<int>());
}

Json to_json(const RationalGeneratingFunction& g) {
  Json j;
  j["numerator"] = to_json(g.numerator());
  Json den = Json::array();
  for (const auto& f : g.denominator_factors()) den.push_back(Json::array({f.k, f.exponent}));
  j["denominator"] = std::move(den);
  if (g.has_leftover()) j["leftover"] = to_json(g.leftover());
  return j;
}

RationalGeneratingFunction generating_function_from_json(const Json& j) {
  std::vector<DenominatorFactor> factors;
  for (const auto& f : j.at("denominator")) factors.push_back({f.at(0).get<std::int64_t>(), f.at(1).get<int>()});
  Polynomial leftover = Polynomial::constant(1);
  if (j.contains("leftover")) leftover = polynomial_from_json(j.at("leftover"));
  return RationalGeneratingFunction(polynomial_from_json(j.at("numerator")), std::move(factors), std::move(leftover));
}

Json to_json(const FitReport& report) {
  Json j;
  j["name"] = report.name;
  j["quasipolynomial"] = to_json(report.quasipolynomial);
  j["period_tested"] = report.periods_rejected;
  j["samples_used"] = report.samples_used;
  j["holdout_verified"] = report.holdout_verified;
  j["period_minimal_certified"] = report.period_minimal_certified;
  return j;
}

Json to_json(const VertexOrientation& eps) {
  Json a = Json::array();
  for (auto s : eps.signs) a.push_back(static_cast<int>(s));
  return a;
}

Json to_json(const NonemptyRegionReport& report) {
  Json j;
  j["found"] = report.found;
  Json regions = Json::array();
  for (const auto& w : report.witnesses) {
    Json r;
    r["orientation"] = to_json(w.orientation);
    r["witness"] = rational_list(w.point);
    r["dilation"] = w.dilation;
    regions.push_back(std::move(r));
  }
  j["regions"] = std::move(regions);
  Json unresolved = Json::array();
  for (const auto& eps : report.unresolved) unresolved.push_back(to_json(eps));
  j["unresolved"] = std::move(unresolved);
  return j;
}

Json to_json(const OrbitIdentityReport& report) {
  Json j;
  j["n"] = report.n;
  j["t_max"] = report.t_max;
  j["region_side"] = integer_list(report.region_side);
  j["star_counts"] = integer_list(report.star_counts);
  j["consistent_offsets"] = report.consistent_offsets;
  return j;
}

}  // namespace harmonium
