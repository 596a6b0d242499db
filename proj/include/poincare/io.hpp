#pragma once

// JSON forms of the exact types. Coefficients are decimal strings, lowest
// degree first; rationals are "p/q" strings.

#include "json.hpp"
#include "poincare/exact.hpp"
#include "poincare/realroot.hpp"

namespace poincare {

using Json = nlohmann::json;

Json to_json(const IntPoly& p);
Json to_json(const BiPoly& f);
/// [{"lo": "p/q", "hi": "p/q", "mid": "<decimal>"}, ...]
Json to_json(const IsolationList& roots, int digits);

/// Throws ParseError on malformed input.
IntPoly int_poly_from_json(const Json& j);
BiPoly bi_poly_from_json(const Json& j);
IsolationList isolation_list_from_json(const Json& j);

}  // namespace poincare
