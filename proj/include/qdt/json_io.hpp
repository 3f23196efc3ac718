#pragma once

#include <string>

#include <json.hpp>

#include "qdt/grobner.hpp"
#include "qdt/motivic.hpp"
#include "qdt/mseries.hpp"
#include "qdt/qrat.hpp"
#include "qdt/verdict.hpp"

namespace qdt {

using Json = nlohmann::ordered_json;

/// Variable used when printing: u, or q with half-integer exponents
/// ("q^-1/2 + 2 + q^1/2").
enum class Notation { U, Q };

/// Laurent polynomial in ascending powers; throws std::invalid_argument if r
/// has a nontrivial denominator.
std::string laurent_to_string(const QRat& r, Notation notation);

/// Laurent polynomials as above, otherwise "(numerator)/(denominator)".
std::string qrat_to_string(const QRat& r, Notation notation);

/// {"num": {"offset": v, "coeffs": [...]}, "den": {...}}: each side is
/// sum_i coeffs[i] u^{offset+i}. Coefficients outside int64 are strings.
Json qrat_to_json(const QRat& r);

/// Inverse of qrat_to_json; also accepts coefficients as numbers or strings
/// and any (possibly unreduced) num/den. Throws std::invalid_argument.
QRat qrat_from_json(const Json& j);

std::string dim_to_key(const DimVector& d);

/// Array of {"d": [...], "value": qrat, "text": ...} in lexicographic order.
Json mseries_to_json(const MSeries& s, Notation notation);

Json dt_result_to_json(const DTResult& r);

Json verdict_to_json(const Verdict& v);

}  // namespace qdt
