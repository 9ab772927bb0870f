#pragma once

// JSON shapes used by the command line tool. Rationals travel as strings so
// nothing is rounded:
//
//   integer      "894"
//   ring element {"ring": {"minpoly": ["-2", "0", "0", "1"]}, "coeffs": ["p/q", ...]}

#include "sylvsum/exact.hpp"
#include "sylvsum/numberfield.hpp"

#include <json.hpp>

namespace sylvsum {

nlohmann::json to_json(const BigInt& x);
nlohmann::json to_json(const RingElement& x);

/// Inverse of to_json(RingElement); throws std::invalid_argument on malformed input.
RingElement ring_element_from_json(const nlohmann::json& j);

} // namespace sylvsum
