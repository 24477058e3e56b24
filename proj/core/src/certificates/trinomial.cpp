#include "bssrw/certificates/trinomial.hpp"

#include <numeric>

#include "bssrw/error.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/integer.hpp"

namespace bssrw {

Poly trinomial(int d, TrinomialFamily family) {
  if (d < 1) throw DomainError("trinomial degree must be positive");
  Poly t = Poly::monomial(Rational(1), static_cast<unsigned>(d));
  switch (family) {
    case TrinomialFamily::minus_minus: return t - Poly::x() - Poly::constant(Rational(1));
    case TrinomialFamily::plus_plus: return t + Poly::x() + Poly::constant(Rational(1));
    case TrinomialFamily::plus_minus: return t + Poly::x() - Poly::constant(Rational(1));
  }
  return t;
}

TrinomialClass selmer_classify(int d, TrinomialFamily family) {
  if (d < 2) throw DomainError("trinomial classification needs d >= 2");
  TrinomialClass c;
  c.d = d;
  c.family = family;
  c.trinomial = trinomial(d, family);

  std::optional<Poly> quadratic;
  if (family == TrinomialFamily::plus_plus && d % 3 == 2) quadratic = Poly::from_integers({1, 1, 1});
  if (family == TrinomialFamily::plus_minus && d % 2 == 1 && d % 3 == 2) quadratic = Poly::from_integers({1, -1, 1});

  if (quadratic && d > 2) {
    auto [q, r] = divmod(c.trinomial, *quadratic);
    if (!r.is_zero()) throw Error("expected quadratic factor does not divide " + to_string(c.trinomial, "T"));
    c.factor = *quadratic;
    c.cofactor = q;
    c.status = family == TrinomialFamily::plus_plus ? TrinomialStatus::factor_t2_plus_t_plus_1
                                                    : TrinomialStatus::factor_t2_minus_t_plus_1;
    c.galois = GaloisInfo::not_applicable;
  } else {
    c.status = TrinomialStatus::irreducible;
    const Integer a = family == TrinomialFamily::minus_minus ? -1 : 1;
    const Integer b = family == TrinomialFamily::plus_plus ? 1 : -1;
    c.galois = osada_sd(d, a, b) == OsadaResult::symmetric_certified ? GaloisInfo::symmetric : GaloisInfo::unknown;
  }
  if (d < 5) {
    c.status = TrinomialStatus::small_degree;
    if (c.galois == GaloisInfo::unknown) c.galois = GaloisInfo::not_applicable;
  }
  return c;
}

OsadaResult osada_sd(int d, const Integer& a, const Integer& b, const Integer& c) {
  if (d < 2 || c == 0) return OsadaResult::inapplicable;
  const Integer cd = pow(c, static_cast<unsigned>(d));
  if (a % cd != 0 || b % cd != 0) return OsadaResult::inapplicable;
  const Integer a0 = a / cd, b0 = b / cd;

  // (1) irreducibility.
  Poly t = Poly::monomial(Rational(1), static_cast<unsigned>(d)) + Poly::monomial(Rational(a), 1) +
           Poly::constant(Rational(b));
  if (squarefree_part(t).degree() != t.degree()) return OsadaResult::inapplicable;
  try {
    if (certify_irreducible(t) == IrreducibilityCertificate::none) return OsadaResult::inapplicable;
  } catch (const DegreeCapExceeded&) {
    return OsadaResult::inapplicable;
  }
  // (2) the gcd condition.
  Integer g;
  const Integer lhs = a0 * c * (d - 1), rhs = Integer(d) * b0;
  mpz_gcd(g.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  return g == 1 ? OsadaResult::symmetric_certified : OsadaResult::inapplicable;
}

Solvability solvability_verdict(int d) {
  if (d < 2) throw DomainError("solvability verdict needs d >= 2");
  if (d <= 4) return Solvability::solvable_small_degree;
  if (d % 2 == 0 || d % 3 != 2) {
    const TrinomialClass c = selmer_classify(d, TrinomialFamily::plus_minus);
    if (c.status != TrinomialStatus::irreducible || c.galois != GaloisInfo::symmetric)
      throw Error("T^" + std::to_string(d) + "+T-1: symmetric Galois group could not be certified");
    return Solvability::nonsolvable_symmetric;
  }
  if (!is_prime(Integer(d)))
    throw OutsideCoveredCases("d = " + std::to_string(d) +
                              " is odd, composite and congruent to 2 mod 3; this case is not covered");
  const Factorization f = factor_over_q(trinomial(d, TrinomialFamily::plus_minus));
  if (f.terms.size() != 2 || f.terms[0].factor.degree() != 2 || f.terms[1].factor.degree() != d - 2)
    throw Error("unexpected factorization of T^" + std::to_string(d) + "+T-1");
  return Solvability::reducible_two_and_rest;
}

std::string to_string(TrinomialFamily f) {
  switch (f) {
    case TrinomialFamily::minus_minus: return "T^d-T-1";
    case TrinomialFamily::plus_plus: return "T^d+T+1";
    case TrinomialFamily::plus_minus: return "T^d+T-1";
  }
  return {};
}

std::string to_string(TrinomialStatus s) {
  switch (s) {
    case TrinomialStatus::irreducible: return "irreducible";
    case TrinomialStatus::factor_t2_plus_t_plus_1: return "factor T^2+T+1";
    case TrinomialStatus::factor_t2_minus_t_plus_1: return "factor T^2-T+1";
    case TrinomialStatus::small_degree: return "small-degree";
  }
  return {};
}

std::string to_string(Solvability s) {
  switch (s) {
    case Solvability::nonsolvable_symmetric: return "nonsolvable-S_d";
    case Solvability::reducible_two_and_rest: return "reducible-2-and-(d-2)";
    case Solvability::solvable_small_degree: return "solvable-small-degree";
  }
  return {};
}

}  // namespace bssrw
