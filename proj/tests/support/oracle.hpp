#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/exact/poly.hpp"

namespace bssrw::testing {

// Reference data produced by tests/oracle/generate.py (SymPy).
const nlohmann::json& oracle();

// Ascending coefficient strings as written by the generator.
Poly poly_from_json(const nlohmann::json& coefficients);

// Expression trees: ["q", "p/q"], ["add"|"sub"|"mul"|"div", a, b], ["root", a, n].
AlgebraicNumber build_tree(const nlohmann::json& tree);

// Prefix of a decimal string up to `digits` fractional digits, truncated.
Rational decimal_to_rational(const std::string& text);

}  // namespace bssrw::testing
