#pragma once

#include <json.hpp>

#include <string>

#include "ratsemi/rational_fn.hpp"

namespace ratsemi {

// Exchange format.  A function is {"num": [c0, c1, ...], "den": [...]} with
// ascending coefficients; each coefficient is "p/q" (or "p"), or
// {"m": M, "coords": ["p/q", ...]} for cyclotomic values.  Round-trips are
// exact: from_json(to_json(f)) == f.
nlohmann::json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);
nlohmann::json function_to_json(const RationalFunction& f);
RationalFunction function_from_json(const nlohmann::json& j);
nlohmann::json mobius_to_json(const Mobius& mu);
Mobius mobius_from_json(const nlohmann::json& j);

// Parses human notation such as "z^3 - 3*z", "(z^2+1)/(z-1)", "1/2*z^2".
// Integers, + - * / ^ ( ), variable z.  Division is exact field division,
// so fractions and rational functions both come out of '/'.
RationalFunction parse_function(const std::string& text);
// Same, but requires the result to be a polynomial.
Polynomial parse_poly(const std::string& text);

// Accepts either human notation or the JSON exchange form (detected by a
// leading '{').
RationalFunction read_function(const std::string& text);

}  // namespace ratsemi
