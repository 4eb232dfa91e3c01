#pragma once

#include <string>

#include <json.hpp>

#include "umbral/boole.hpp"
#include "umbral/euler.hpp"
#include "umbral/padic.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"
#include "umbral/stirling.hpp"
#include "umbral/verify.hpp"

namespace umbral {

using Json = nlohmann::ordered_json;

// Rationals serialize as "a" or "a/b" strings; polynomials as arrays of those,
// lowest degree first.
Json to_json(const Rational& r);
Json to_json(const Poly& p);
Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);

// {"order": T, "coeffs": [...]}
Json to_json(const Series<Rational>& s);
Json to_json(const Series<Poly>& s);
Series<Rational> rational_series_from_json(const Json& j);
Series<Poly> poly_series_from_json(const Json& j);

/// List of polynomials.
Json to_json(const EulerSequence& seq);
/// {kind, lambda, order_k, polys}
Json to_json(const BooleSequence& seq);

/// {p, M, N, n, k, kind, lambda, x, lhs_residue, rhs_residue, modulus, agree}
Json to_json(const CongruenceReport& r);
CongruenceReport congruence_report_from_json(const Json& j);

Json to_json(const VerificationCase& c);
Json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const Json& j);

/// "n,l,value" rows in lexicographic (n, l) order.
std::string stirling_csv(StirlingKind kind, std::size_t max_n);

}  // namespace umbral
