#pragma once

#include <optional>
#include <string>

#include "bssrw/exact/poly.hpp"

namespace bssrw {

enum class TrinomialFamily {
  minus_minus,  // T^d - T - 1
  plus_plus,    // T^d + T + 1
  plus_minus,   // T^d + T - 1
};

enum class TrinomialStatus { irreducible, factor_t2_plus_t_plus_1, factor_t2_minus_t_plus_1, small_degree };
enum class GaloisInfo { symmetric, unknown, not_applicable };

struct TrinomialClass {
  int d = 0;
  TrinomialFamily family = TrinomialFamily::plus_minus;
  TrinomialStatus status = TrinomialStatus::irreducible;
  GaloisInfo galois = GaloisInfo::unknown;
  Poly trinomial;
  std::optional<Poly> factor;    // the quadratic factor when reducible
  std::optional<Poly> cofactor;  // trinomial / factor, checked by exact division
};

Poly trinomial(int d, TrinomialFamily family);

// Classification by d mod 3 (and parity for T^d + T - 1, through Y = -T).
// Degrees below 5 are reported as small_degree. Throws DomainError for d < 2.
TrinomialClass selmer_classify(int d, TrinomialFamily family);

enum class OsadaResult { symmetric_certified, inapplicable };

// Galois group S_d for T^d + a T + b when the trinomial is irreducible and
// gcd(a0 c (d - 1), d b0) = 1, where a = a0 c^d and b = b0 c^d. Never claims "not S_d".
OsadaResult osada_sd(int d, const Integer& a, const Integer& b, const Integer& c = 1);

enum class Solvability { nonsolvable_symmetric, reducible_two_and_rest, solvable_small_degree };

// For T^d + T - 1. Throws OutsideCoveredCases for composite odd d = 2 (mod 3), d >= 5.
Solvability solvability_verdict(int d);

std::string to_string(TrinomialFamily f);
std::string to_string(TrinomialStatus s);
std::string to_string(Solvability s);

}  // namespace bssrw
