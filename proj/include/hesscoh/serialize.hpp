#pragma once

#include "json.hpp"

#include "hesscoh/polynomial.hpp"

namespace hesscoh {

using Json = nlohmann::json;

/// {"n": int, "terms": [{"x": [...], "t": int, "c": "num/den"}]} with terms
/// in canonical order.
Json toJson(const Polynomial& p);
Polynomial polynomialFromJson(const Json& j);

Json toJson(const Monomial& m);

}  // namespace hesscoh
