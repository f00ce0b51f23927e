#pragma once

#include <nlohmann/json.hpp>

#include "harmonium/fit.hpp"
#include "harmonium/generating_function.hpp"
#include "harmonium/quasipolynomial.hpp"
#include "harmonium/regions.hpp"

namespace harmonium {

using Json = nlohmann::ordered_json;

/// Rationals are written as "num/den" strings; polynomials as arrays of
/// them, lowest degree first.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"period": p, "degree": n, "constituents": [[c0, c1, ...], ...]}
Json to_json(const Quasipolynomial& q);
Quasipolynomial quasipolynomial_from_json(const Json& j);

/// {"numerator": [...], "denominator": [[k, e], ...]} plus "leftover" when
/// the denominator is not a pure product of (1 - z^k) factors.
Json to_json(const RationalGeneratingFunction& g);
RationalGeneratingFunction generating_function_from_json(const Json& j);

Json to_json(const FitReport& report);
Json to_json(const VertexOrientation& eps);
Json to_json(const NonemptyRegionReport& report);
Json to_json(const OrbitIdentityReport& report);

}  // namespace harmonium
