#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/cake/measure.hpp"
#include "bssrw/exact/interval.hpp"
#include "bssrw/exact/poly.hpp"

namespace bssrw {

// f1 + f2 - 1: its root in (0,1) is the cutpoint of a simple equitable division
// of two players, whichever side each player receives.
Poly equitable_equation(const Measure& f1, const Measure& f2);

struct EquitableCutpoint {
  AlgebraicNumber t;
  int degree = 1;
};

EquitableCutpoint isolate_equitable_cutpoint(const Measure& f1, const Measure& f2);

enum class Verdict { impossible, no_obstruction_found };
std::string to_string(Verdict v);

struct FactorDegree {
  Poly factor;
  int multiplicity = 1;
  int degree = 0;
};

// One justification step; `anchor` is a stable machine-readable key.
struct NarrativeStep {
  std::string anchor;
  std::string text;
};

struct Certificate {
  std::string target;  // "equitable-simple(d=5)" or "welfare(n=2,p=3)"
  Poly equation;
  std::vector<FactorDegree> factorization;
  Poly real_root_factor;
  DyadicInterval real_root_isolator;
  std::vector<long> tower_primes;
  std::string galois_fact;  // "S_6-nonsolvable", "reducible(2, 3)" or "degree-obstruction(2)"
  Verdict verdict = Verdict::no_obstruction_found;
  std::vector<NarrativeStep> narrative;

  int real_root_degree() const { return real_root_factor.degree(); }
  std::string text() const;
};

// Simple equitable division for (x, x^d). Throws OutsideCoveredCases for odd
// composite d = 2 (mod 3), d >= 5, and DomainError for d < 1.
Certificate check_impossibility_equitable(int d, bool allow_sqrt);

// Welfare-maximising division for n players with measures (x, ..., x, x^p).
// Throws DomainError for n < 2, non-prime p, or p = 2.
Certificate check_impossibility_welfare(int n, int p);

}  // namespace bssrw
