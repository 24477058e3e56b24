#include <gtest/gtest.h>

#include <numeric>

#include "bssrw/certificates/certificate.hpp"
#include "bssrw/certificates/trinomial.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/modp.hpp"
#include "bssrw/exact/parse.hpp"
#include "bssrw/exact/roots.hpp"
#include "bssrw/tower/tower.hpp"

namespace bssrw {
namespace {

Poly P(std::string s) {
  for (char& ch : s)
    if (ch == 'T') ch = 'x';
  return parse_poly(s);
}

// Recomputes every claim an IMPOSSIBLE certificate rests on.
void expect_sound(const Certificate& c) {
  ASSERT_EQ(c.verdict, Verdict::impossible);
  Poly product{Rational(1)};
  for (const auto& f : c.factorization) {
    EXPECT_EQ(f.degree, f.factor.degree());
    EXPECT_NE(certify_irreducible(f.factor), IrreducibilityCertificate::none) << to_string(f.factor);
    for (int i = 0; i < f.multiplicity; ++i) product = product * f.factor;
  }
  EXPECT_EQ(primitive_part(product), primitive_part(c.equation));
  EXPECT_EQ(sturm_isolate(c.real_root_factor, c.real_root_isolator).size(), 1u);
  EXPECT_TRUE(divides(c.real_root_factor, c.equation));
  if (c.galois_fact.find("nonsolvable") == std::string::npos)
    EXPECT_TRUE(degree_obstruction(c.real_root_degree(), c.tower_primes));
  EXPECT_EQ(c.narrative.back().anchor, "conclusion");
}

TEST(Equitable, QuinticFactorsIntoQuadraticAndCubic) {
  for (bool sqrt : {false, true}) {
    const Certificate c = check_impossibility_equitable(5, sqrt);
    expect_sound(c);
    EXPECT_EQ(c.equation, P("T^5+T-1"));
    ASSERT_EQ(c.factorization.size(), 2u);
    EXPECT_EQ(c.factorization[0].factor, P("T^2-T+1"));
    EXPECT_EQ(c.factorization[1].factor, P("T^3+T^2-1"));
    EXPECT_EQ(c.real_root_factor, P("T^3+T^2-1"));
    EXPECT_EQ(c.tower_primes, sqrt ? std::vector<long>({2, 5}) : std::vector<long>({5}));
    EXPECT_EQ(c.galois_fact, "reducible(2, 3)");
  }
}

TEST(Equitable, DegreeGrid) {
  for (int d : {1, 2, 3, 4}) {
    const Certificate c = check_impossibility_equitable(d, false);
    EXPECT_EQ(c.verdict, Verdict::no_obstruction_found) << d;
    EXPECT_EQ(c.real_root_degree(), d);
  }
  EXPECT_EQ(check_impossibility_equitable(1, false).real_root_isolator.lo(), Rational(0));
  for (int d : {6, 7, 8, 9, 10, 12, 13}) {
    SCOPED_TRACE(d);
    const Certificate c = check_impossibility_equitable(d, d % 2 == 1);
    expect_sound(c);
    EXPECT_EQ(c.galois_fact, "S_" + std::to_string(d) + "-nonsolvable");
    EXPECT_EQ(c.real_root_degree(), d);
  }
  const Certificate eleven = check_impossibility_equitable(11, false);
  expect_sound(eleven);
  ASSERT_EQ(eleven.factorization.size(), 2u);
  EXPECT_EQ(eleven.factorization[0].degree, 2);
  EXPECT_EQ(eleven.factorization[1].degree, 9);
  EXPECT_EQ(eleven.galois_fact, "reducible(2, 9)");
}

TEST(Equitable, OutsideCasesAndBadInput) {
  EXPECT_THROW(check_impossibility_equitable(35, false), OutsideCoveredCases);
  EXPECT_THROW(check_impossibility_equitable(65, false), OutsideCoveredCases);
  EXPECT_THROW(check_impossibility_equitable(0, false), DomainError);
  EXPECT_THROW(check_impossibility_equitable(17, false), DegreeCapExceeded);
  set_degree_cap(20);
  const Certificate c = check_impossibility_equitable(17, false);
  set_degree_cap(std::nullopt);
  expect_sound(c);
  EXPECT_EQ(c.galois_fact, "reducible(2, 15)");
}

TEST(Equitable, CutpointAgreesWithCertificate) {
  const auto ms = parse_measures("a: x\nb: x^5");
  EXPECT_EQ(equitable_equation(ms[0], ms[1]), parse_poly("x^5+x-1"));
  const EquitableCutpoint cut = isolate_equitable_cutpoint(ms[0], ms[1]);
  EXPECT_EQ(cut.degree, check_impossibility_equitable(5, false).real_root_degree());
  EXPECT_EQ(cut.t.minpoly(), parse_poly("x^3+x^2-1"));
  EXPECT_EQ(cut.t + pow(cut.t, 5), AlgebraicNumber(1L));
}

TEST(Welfare, StationarityDegreeIsPMinusOne) {
  for (int n : {2, 3, 5}) {
    for (int p : {3, 5, 7, 11, 13}) {
      SCOPED_TRACE(std::to_string(n) + "," + std::to_string(p));
      const Certificate c = check_impossibility_welfare(n, p);
      expect_sound(c);
      EXPECT_EQ(c.real_root_degree(), p - 1);
      EXPECT_EQ(c.tower_primes, std::vector<long>({p}));
      EXPECT_EQ(c.galois_fact, "degree-obstruction(" + std::to_string(p - 1) + ")");
    }
  }
  EXPECT_EQ(check_impossibility_welfare(2, 3).equation, P("3*T^2-1"));
  EXPECT_THROW(check_impossibility_welfare(2, 2), DomainError);
  EXPECT_THROW(check_impossibility_welfare(2, 9), DomainError);
  EXPECT_THROW(check_impossibility_welfare(1, 3), DomainError);
}

TEST(Welfare, TextReport) {
  const std::string t = check_impossibility_welfare(2, 3).text();
  EXPECT_NE(t.find("target: welfare(n=2,p=3)\nequation: 3*T^2-1\n"), std::string::npos) << t;
  EXPECT_NE(t.find("verdict: IMPOSSIBLE\n"), std::string::npos);
  EXPECT_NE(t.find("[irreducibility] the reversal T^2-3 is Eisenstein at 3"), std::string::npos);
}

TEST(Selmer, ReducibleExactlyAtFiveAndEleven) {
  for (int d = 5; d <= 12; ++d) {
    SCOPED_TRACE(d);
    const TrinomialClass c = selmer_classify(d, TrinomialFamily::plus_minus);
    const bool reducible = d == 5 || d == 11;
    EXPECT_EQ(c.status != TrinomialStatus::irreducible, reducible);
    if (reducible) {
      ASSERT_TRUE(c.factor && c.cofactor);
      EXPECT_EQ(*c.factor, P("T^2-T+1"));
      EXPECT_EQ(*c.factor * *c.cofactor, c.trinomial);
    } else {
      EXPECT_EQ(c.galois, GaloisInfo::symmetric);
      const bool probe = probe_factor_degrees(c.trinomial).possible.empty();
      EXPECT_TRUE(probe || (d <= 8 && certify_irreducible(c.trinomial) == IrreducibilityCertificate::kronecker));
    }
  }
}

TEST(Selmer, OtherFamilies) {
  const TrinomialClass pp = selmer_classify(5, TrinomialFamily::plus_plus);
  EXPECT_EQ(pp.status, TrinomialStatus::factor_t2_plus_t_plus_1);
  EXPECT_EQ(*pp.cofactor, P("T^3-T^2+1"));
  EXPECT_EQ(selmer_classify(7, TrinomialFamily::minus_minus).status, TrinomialStatus::irreducible);
  for (int d = 5; d <= 12; ++d)
    EXPECT_EQ(selmer_classify(d, TrinomialFamily::minus_minus).status, TrinomialStatus::irreducible) << d;
  EXPECT_EQ(selmer_classify(3, TrinomialFamily::plus_minus).status, TrinomialStatus::small_degree);
  EXPECT_THROW(selmer_classify(1, TrinomialFamily::plus_minus), DomainError);
  for (int d = 2; d <= 30; ++d)
    for (auto f : {TrinomialFamily::plus_minus, TrinomialFamily::plus_plus, TrinomialFamily::minus_minus}) {
      const TrinomialClass c = selmer_classify(d, f);
      if (c.factor) EXPECT_TRUE(divides(*c.factor, c.trinomial));
    }
}

TEST(Osada, GcdCondition) {
  EXPECT_EQ(osada_sd(6, 1, -1), OsadaResult::symmetric_certified);
  EXPECT_EQ(osada_sd(4, 2, 2), OsadaResult::inapplicable);
  EXPECT_EQ(osada_sd(5, 1, -1), OsadaResult::inapplicable);  // reducible
  for (long d = 2; d <= 100; ++d) EXPECT_EQ(std::gcd(d - 1, d), 1);
}

TEST(Solvability, Verdicts) {
  EXPECT_EQ(solvability_verdict(4), Solvability::solvable_small_degree);
  EXPECT_EQ(solvability_verdict(5), Solvability::reducible_two_and_rest);
  EXPECT_EQ(solvability_verdict(6), Solvability::nonsolvable_symmetric);
  EXPECT_EQ(solvability_verdict(9), Solvability::nonsolvable_symmetric);
  EXPECT_THROW(solvability_verdict(35), OutsideCoveredCases);
}

}  // namespace
}  // namespace bssrw
