#pragma once

#include <string>
#include <vector>

#include "tame/polymap.hpp"

namespace tame {

/// Parse a polynomial in the map variables (and t, for Q[t] coefficients).
/// Grammar: infix + - * / ^ with `*` required between factors, `^` taking
/// nonnegative integer powers, and `/` dividing by constant (scalar) factors
/// only.  Rational values are rejected when the ring is not a field.
MultiPoly parse_poly(const std::string& text, const Ring& ring, int nvars);

/// Parse a parenthesized comma-separated tuple "(p1, ..., pn)" into a map.
PolyMap parse_map(const std::string& text, const Ring& ring);

/// Source text together with its parsed form and ring tag.
struct MapExpr {
    std::string source;
    PolyMap map;
    Ring ring;
};

MapExpr parse_map_expr(const std::string& text, const Ring& ring);

/// Ring tag used by the CLI: Z, Q or Qt.
Ring ring_from_tag(const std::string& tag);

}  // namespace tame
