#pragma once

#include <string>
#include <string_view>

#include "gpd/groupoid.hpp"

namespace gpd {

// Configuration document format (JSON):
//   { "name": string,
//     "field": { "min_poly": [int, ...] },          // monic, low degree first
//     "lines": [ { "basis": [[coeff, ...], [coeff, ...]] }, ... ],
//     "marked": [ [ [coeff, coeff], ... ], ... ] }  // optional, per line
// A coeff is an integer or an array of integers (polynomial in t, low degree
// first). Throws ParseError with positional context on malformed input.
Configuration parse_config(std::string_view text);

// Inverse of parse_config up to projective normalization of the coordinates:
// parse_config(emit_config(c)) == c. Points with rational coordinates are
// scaled to primitive integer vectors, which names the same projective data.
std::string emit_config(const Configuration& c);

}  // namespace gpd
