#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bssrw/exact/poly.hpp"

namespace bssrw {

// Largest degree accepted by factor_over_q. Defaults to 12; the environment
// variable BSSRW_DEGREE_CAP overrides it, and set_degree_cap overrides both.
int degree_cap();
void set_degree_cap(std::optional<int> cap);

enum class EisensteinVerdict { irreducible_certified, inconclusive };

struct EisensteinResult {
  EisensteinVerdict verdict = EisensteinVerdict::inconclusive;
  bool via_reversal = false;
};

// Eisenstein's criterion at the prime q on the primitive form of p, optionally
// also on its reversal (only when p(0) != 0). Throws DomainError if q is not prime.
EisensteinResult eisenstein(const Poly& p, const Integer& q, bool try_reversal);

struct FactorTerm {
  Poly factor;  // primitive, integral, positive leading coefficient, irreducible
  int multiplicity = 1;
  friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

struct Factorization {
  Rational content{1};
  std::vector<FactorTerm> terms;  // sorted by (degree, coefficients)
  Poly product() const;
};

// How irreducibility of a squarefree primitive polynomial was established.
enum class IrreducibilityCertificate {
  none,
  linear,
  no_rational_root_low_degree,  // degree 2 or 3 without rational roots
  eisenstein,
  eisenstein_reversal,
  modular_degrees,  // incompatible factor-degree patterns mod small primes
  kronecker,        // exhaustive divisor search
};
std::string to_string(IrreducibilityCertificate c);

// Cheap certificates only (never Kronecker). Input must be squarefree.
IrreducibilityCertificate quick_irreducibility(const Poly& p);

// Full decision for squarefree p (uses Kronecker under the degree cap).
IrreducibilityCertificate certify_irreducible(const Poly& p);

// Complete factorization over Q: content, then squarefree decomposition, then
// rational roots, Eisenstein, modular probes and Kronecker's divisor search.
// Throws DegreeCapExceeded for deg(p) > degree_cap(), ZeroPolynomialError for 0.
Factorization factor_over_q(const Poly& p);

// Kronecker search for a divisor of degree in [1, max_degree]; nullopt if none.
std::optional<Poly> kronecker_divisor(const Poly& p, int max_degree);

}  // namespace bssrw
