#pragma once

// JSON forms of the library's value types. Integers of unbounded size are
// always written as decimal strings.

#include <json.hpp>

#include "motivic/error.hpp"
#include "motivic/hilbert.hpp"
#include "motivic/numeric.hpp"
#include "motivic/rat.hpp"
#include "motivic/witt.hpp"

namespace motivic {

using Json = nlohmann::ordered_json;

Json big_array(std::span<const BigInt> values);
std::vector<BigInt> parse_big_array(const Json& j);

/// {"precision": N, "coeffs": ["a_1", ..., "a_N"]}
Json witt_to_json(const WittVector& w);
/// Accepts the object form or a bare array of integers or decimal strings.
WittVector witt_from_json(const Json& j);

/// {"numerator": [...], "denominator": [...]}
Json rational_to_json(const RationalFn& f);
RationalFn rational_from_json(const Json& j);

Json weil_to_json(const WeilReport& r);
Json symbols_to_json(const SteinbergProduct& s);

/// {"error": {"code": "...", "message": "...", "position": n}}
Json error_to_json(const Error& e);

}  // namespace motivic
