#pragma once

#include <string>

#include <json.hpp>

#include "rlk/contfrac.hpp"
#include "rlk/fraction.hpp"
#include "rlk/poly.hpp"

namespace rlk {

using json = nlohmann::json;

/// "z^3 + 2z", "-4z^2 + 1", "0"; highest power first, explicit signs.
std::string to_text(const IntPoly& p, const std::string& var = "z");
std::string to_text(const GF2Poly& p, const std::string& var = "z");
/// "t^2 - t + 1 - t^-1 + t^-2".
std::string to_text(const LaurentPoly& p, const std::string& var = "t");
/// "[2,-2]"; "[]" for the empty sequence.
std::string to_text(const ContinuedFraction& cf);
/// Quotients separated by single spaces: "4 -2 2"; "" when empty.
std::string to_plain_text(const ContinuedFraction& cf);

/// Exact JSON integer: a number when it fits 64 bits, a decimal string
/// otherwise (never a float).
json to_json(const Int& v);
/// {"variable":"z","coeffs":[c0,c1,...]} low-to-high.
json to_json(const IntPoly& p);
/// {"variable":"z","coeffs":[0,1,...]} of 0/1 entries.
json to_json(const GF2Poly& p);
/// {"variable":"t","min_degree":d,"coeffs":[...]}.
json to_json(const LaurentPoly& p);
json to_json(const ContinuedFraction& cf);

}  // namespace rlk
