#pragma once

#include <string_view>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/cake/allocation.hpp"
#include "bssrw/cake/measure.hpp"

namespace bssrw::cli {

// Endpoint forms: "p/q", "r^(1/d)" with rational r, and "root(<poly>, lo, hi)"
// naming the unique root of the polynomial in [lo, hi].
AlgebraicNumber parse_endpoint(std::string_view text, int line = 1, int column = 1);

// One line per player, "name: [a, b] [c, d] ...", names matching the measures.
// Players without a line receive nothing.
Allocation parse_allocation(std::string_view text, const std::vector<Measure>& measures);

}  // namespace bssrw::cli
