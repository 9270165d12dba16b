#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "alexobs/laurent.hpp"

namespace alexobs {

// Textual polynomial encodings shared by all file formats:
//   * triple list: [[exponent, numerator, denominator], ...] in strictly
//     increasing exponent order, e.g. t^2 - t + 1 as [[0,1,1],[1,-1,1],[2,1,1]]
//   * cyclotomic shorthand: {"cyclo": {"2": 1, "6": 1}} for Phi_2 * Phi_6
// Numerators/denominators outside the 64-bit range are encoded as decimal
// strings.

nlohmann::ordered_json poly_to_json(const LaurentPoly& p);

// Throws std::invalid_argument with `where` in the message on malformed
// input. Orders used by a cyclo shorthand are appended to *cyclo_hints when
// it is non-null.
LaurentPoly poly_from_json(const nlohmann::json& j, const std::string& where,
                           std::set<long long>* cyclo_hints = nullptr);

}  // namespace alexobs
