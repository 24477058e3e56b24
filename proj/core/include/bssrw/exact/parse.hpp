#pragma once

#include <string_view>

#include "bssrw/exact/poly.hpp"

namespace bssrw {

// Parses the polynomial grammar: terms `c`, `c*x^k`, `c*x`, `x^k`, `x` joined
// by `+`/`-`, coefficients integers or `p/q`, whitespace insignificant.
// Errors carry 1-based line/column; `line` and `column_offset` locate `text`
// inside a larger document.
Poly parse_poly(std::string_view text, int line = 1, int column_offset = 0);

}  // namespace bssrw
