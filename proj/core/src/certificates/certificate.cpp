#include "bssrw/certificates/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "bssrw/certificates/trinomial.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/integer.hpp"
#include "bssrw/exact/roots.hpp"
#include "bssrw/tower/tower.hpp"

namespace bssrw {

namespace {

const DyadicInterval kUnit(Rational(0), Rational(1));

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return "{" + s + "}";
}

// The factor owning the unique root of `equation` in (0,1), with its isolator.
std::pair<Poly, DyadicInterval> unit_root_factor(const std::vector<FactorDegree>& factors) {
  for (const auto& f : factors) {
    SturmSequence s(f.factor);
    if (s.count(Rational(0), Rational(1)) == 1 && f.factor(Rational(1)) != 0) {
      for (const auto& iv : sturm_isolate(f.factor, kUnit))
        if (iv.lo() >= 0 && iv.hi() <= 1) return {f.factor, iv};
    }
  }
  throw Error("no factor has a root in (0,1)");
}

std::vector<FactorDegree> to_factor_degrees(const Factorization& f) {
  std::vector<FactorDegree> out;
  for (const auto& t : f.terms) out.push_back({t.factor, t.multiplicity, t.factor.degree()});
  return out;
}

std::vector<long> tower_primes_for(long d, bool allow_sqrt) {
  std::vector<long> primes = d > 1 ? prime_factors(d) : std::vector<long>{};
  if (allow_sqrt && std::find(primes.begin(), primes.end(), 2L) == primes.end()) primes.push_back(2);
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace

Poly equitable_equation(const Measure& f1, const Measure& f2) {
  return f1.cdf() + f2.cdf() - Poly::constant(Rational(1));
}

EquitableCutpoint isolate_equitable_cutpoint(const Measure& f1, const Measure& f2) {
  const Poly e = equitable_equation(f1, f2);
  const AlgebraicNumber t = AlgebraicNumber::root_of(e, kUnit);
  return {t, t.degree()};
}

std::string to_string(Verdict v) { return v == Verdict::impossible ? "IMPOSSIBLE" : "NO-OBSTRUCTION-FOUND"; }

Certificate check_impossibility_equitable(int d, bool allow_sqrt) {
  if (d < 1) throw DomainError("equitable certificate needs d >= 1");
  Certificate c;
  c.target = "equitable-simple(d=" + std::to_string(d) + ")";
  c.equation = trinomial(d, TrinomialFamily::plus_minus);
  c.tower_primes = tower_primes_for(d, allow_sqrt);
  const std::string eq = to_string(c.equation, "T");
  c.narrative.push_back({"equitable-equation",
                         "a simple equitable division of (x, x^" + std::to_string(d) + ") cuts at t with " + eq +
                             " = 0, for either orientation of the two pieces"});
  c.narrative.push_back({"existence", eq + " is -1 at 0, 1 at 1 and strictly increasing, so t in (0,1) is unique"});
  c.narrative.push_back({"radical-tower", "cut answers for measures x and x^" + std::to_string(d) +
                                              " generate steps of degree in " + join(c.tower_primes) +
                                              ", each a radical extension"});

  const bool covered_by_factor_route = d >= 5 && d % 2 == 1 && d % 3 == 2;
  if (covered_by_factor_route && !is_prime(Integer(d)))
    throw OutsideCoveredCases("d = " + std::to_string(d) +
                              " is odd, composite and congruent to 2 mod 3; this case is not covered");

  if (d >= 5 && !covered_by_factor_route) {
    const TrinomialClass cls = selmer_classify(d, TrinomialFamily::plus_minus);
    if (solvability_verdict(d) != Solvability::nonsolvable_symmetric || cls.status != TrinomialStatus::irreducible)
      throw Error("nonsolvability route failed for d = " + std::to_string(d));
    c.factorization = {{c.equation, 1, d}};
    std::tie(c.real_root_factor, c.real_root_isolator) = unit_root_factor(c.factorization);
    c.galois_fact = "S_" + std::to_string(d) + "-nonsolvable";
    c.narrative.push_back({"irreducibility", eq + " is irreducible (" + std::string(d % 2 == 0 ? "d even" : "d odd, d != 2 mod 3") +
                                                 "; substitution Y = -T)"});
    c.narrative.push_back({"symmetric-group", "gcd(d-1, d) = 1 with irreducibility gives Galois group S_" +
                                                  std::to_string(d)});
    c.narrative.push_back({"nonsolvable", "S_" + std::to_string(d) + " is not solvable for d >= 5, so t has no radical expression"});
    c.verdict = Verdict::impossible;
    c.narrative.push_back({"conclusion", "t would lie in a radical tower over Q; impossible"});
    return c;
  }

  const Factorization f = factor_over_q(c.equation);
  c.factorization = to_factor_degrees(f);
  std::tie(c.real_root_factor, c.real_root_isolator) = unit_root_factor(c.factorization);
  const int k = c.real_root_factor.degree();
  std::string factors;
  for (const auto& t : c.factorization) factors += "(" + to_string(t.factor, "T") + ")";
  c.narrative.push_back({"factorization", eq + " = " + factors + ", every factor certified irreducible"});
  c.narrative.push_back({"real-root-location", "t is the root of " + to_string(c.real_root_factor, "T") + " in " +
                                                   to_string(c.real_root_isolator) + "; [Q(t):Q] = " +
                                                   std::to_string(k)});

  if (covered_by_factor_route) {
    c.galois_fact = "reducible(2, " + std::to_string(d - 2) + ")";
    c.narrative.push_back({"quadratic-factor", "T^2-T+1 has discriminant -3 and no real root"});
    if (!degree_obstruction(k, c.tower_primes)) throw Error("degree obstruction expected for d = " + std::to_string(d));
    c.verdict = Verdict::impossible;
    c.narrative.push_back({"degree-obstruction", std::to_string(k) + " does not divide any product of primes in " +
                                                     join(c.tower_primes) + ", yet [Q(t):Q] divides the tower degree"});
    c.narrative.push_back({"conclusion", "no tower reachable by queries contains t; impossible"});
    return c;
  }

  c.galois_fact = "degree(" + std::to_string(k) + ")";
  c.verdict = Verdict::no_obstruction_found;
  c.narrative.push_back({"no-obstruction", degree_obstruction(k, c.tower_primes)
                                               ? "degree " + std::to_string(k) + " leaves primes outside " +
                                                     join(c.tower_primes) + ", but small d is outside the argument"
                                               : "degree " + std::to_string(k) + " is compatible with tower primes " +
                                                     join(c.tower_primes)});
  return c;
}

Certificate check_impossibility_welfare(int n, int p) {
  if (n < 2) throw DomainError("welfare certificate needs n >= 2 players");
  if (p == 2) throw DomainError("p = 2 gives the rational cutpoint 1/2; there is no obstruction to certify");
  if (p < 2 || !is_prime(Integer(p))) throw DomainError("p = " + std::to_string(p) + " is not a prime >= 3");
  Certificate c;
  c.target = "welfare(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
  c.equation = Poly::monomial(Rational(p), static_cast<unsigned>(p - 1)) - Poly::constant(Rational(1));
  c.tower_primes = {p};
  const std::string eq = to_string(c.equation, "T");
  c.narrative.push_back({"stationarity", "an optimal interior cutpoint x0 between the uniform players and x^" +
                                             std::to_string(p) + " satisfies " + eq + " = 0"});
  const EisensteinResult e = eisenstein(c.equation, Integer(p), true);
  if (e.verdict != EisensteinVerdict::irreducible_certified) throw Error("Eisenstein certificate failed");
  c.factorization = {{c.equation, 1, p - 1}};
  std::tie(c.real_root_factor, c.real_root_isolator) = unit_root_factor(c.factorization);
  c.narrative.push_back({"irreducibility", std::string("the reversal T^") + std::to_string(p - 1) + "-" +
                                               std::to_string(p) + " is Eisenstein at " + std::to_string(p)});
  c.narrative.push_back({"degree-bound", "1 < [Q(x0):Q] < p holds"});
  c.narrative.push_back({"exact-degree", "[Q(x0):Q] = " + std::to_string(p - 1) + " exactly"});
  if (!degree_obstruction(p - 1, c.tower_primes)) throw Error("degree obstruction expected");
  c.galois_fact = "degree-obstruction(" + std::to_string(p - 1) + ")";
  c.narrative.push_back({"degree-obstruction", std::to_string(p - 1) + " is not a power of " + std::to_string(p)});
  c.narrative.push_back({"conclusion", "the argument does not depend on n = " + std::to_string(n) + "; impossible"});
  c.verdict = Verdict::impossible;
  return c;
}

std::string Certificate::text() const {
  std::ostringstream os;
  os << "target: " << target << "\n";
  os << "equation: " << to_string(equation, "T") << "\n";
  os << "factorization:";
  for (const auto& f : factorization) {
    os << " (" << to_string(f.factor, "T") << ")";
    if (f.multiplicity > 1) os << "^" << f.multiplicity;
  }
  os << "\ndegrees:";
  for (const auto& f : factorization) os << " " << f.degree;
  os << "\nreal-root factor: " << to_string(real_root_factor, "T") << " on " << to_string(real_root_isolator)
     << " (degree " << real_root_degree() << ")\n";
  os << "tower primes: " << join(tower_primes) << "\n";
  os << "galois: " << galois_fact << "\n";
  os << "verdict: " << to_string(verdict) << "\n";
  os << "narrative:\n";
  for (std::size_t i = 0; i < narrative.size(); ++i)
    os << "  " << i + 1 << ". [" << narrative[i].anchor << "] " << narrative[i].text << "\n";
  return os.str();
}

}  // namespace bssrw
