#include <gtest/gtest.h>

#include <algorithm>

#include "bssrw/error.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/integer.hpp"
#include "bssrw/exact/modp.hpp"
#include "bssrw/exact/parse.hpp"
#include "bssrw/exact/poly.hpp"
#include "bssrw/exact/roots.hpp"
#include "support/oracle.hpp"

namespace bssrw {
namespace {

using testing::oracle;
using testing::poly_from_json;

Poly P(std::initializer_list<long> cs) { return Poly::from_integers(cs); }

TEST(Rational, CanonicalAndDecimal) {
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_EQ(to_decimal(make_rational(2, 3), 5), "0.66666");
  EXPECT_EQ(to_decimal(make_rational(-2, 3), 3), "-0.666");
  EXPECT_EQ(to_decimal(Rational(7), 2), "7.00");
  EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
  EXPECT_THROW(parse_rational("x"), DomainError);
}

TEST(Rational, SimplestBetweenHasSmallestDenominator) {
  EXPECT_EQ(simplest_between(make_rational(3, 10), make_rational(2, 5)), make_rational(1, 3));
  EXPECT_EQ(simplest_between(make_rational(1, 2), make_rational(1, 2)), make_rational(1, 2));
  EXPECT_EQ(simplest_between(Rational(-3), make_rational(5, 2)), Rational(0));
}

TEST(Rational, ExactRoot) {
  Rational r;
  EXPECT_TRUE(exact_root(make_rational(32, 243), 5, r));
  EXPECT_EQ(r, make_rational(2, 3));
  EXPECT_TRUE(exact_root(Rational(-8), 3, r));
  EXPECT_EQ(r, Rational(-2));
  EXPECT_FALSE(exact_root(Rational(2), 2, r));
}

TEST(Integer, PrimesAndDivisors) {
  EXPECT_TRUE(is_prime(97L));
  EXPECT_FALSE(is_prime(91L));
  EXPECT_EQ(prime_factors(360), (std::vector<long>{2, 3, 5}));
  const auto ds = positive_divisors(Integer(12));
  EXPECT_EQ(ds.size(), 6u);
  EXPECT_EQ(ds.back(), 12);
}

TEST(Poly, ArithmeticAndDivision) {
  const Poly a = P({-1, 0, 1});  // x^2 - 1
  const Poly b = P({1, 1});
  EXPECT_EQ(a / b, P({-1, 1}));
  EXPECT_TRUE((a % b).is_zero());
  const auto [q, r] = divmod(P({1, 0, 0, 1}), P({1, 1, 1}));
  EXPECT_EQ(q * P({1, 1, 1}) + r, P({1, 0, 0, 1}));
  EXPECT_LT(r.degree(), 2);
  EXPECT_EQ(P({0, 0, 1}).compose(P({1, 1})), P({1, 2, 1}));
  EXPECT_EQ(P({1, 2, 3}).reversal(), P({3, 2, 1}));
  EXPECT_EQ(P({1, 0, 1}).substitute_power(3), P({1, 0, 0, 0, 0, 0, 1}));
}

TEST(Poly, GcdAndSquarefree) {
  const Poly f = P({-1, 1}).pow(3) * P({2, 0, 1});
  EXPECT_EQ(poly_gcd(f, f.derivative()), P({-1, 1}).pow(2));
  EXPECT_EQ(squarefree_part(f), P({-1, 1}) * P({2, 0, 1}));
  const auto parts = squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], P({2, 0, 1}));
  EXPECT_TRUE(parts[1].is_constant());
  EXPECT_EQ(parts[2], P({-1, 1}));
  const auto e = extended_gcd(P({-1, 0, 1}), P({1, 1, 1}));
  EXPECT_EQ(e.s * P({-1, 0, 1}) + e.t * P({1, 1, 1}), e.gcd);
}

TEST(Poly, ResultantMatchesOracle) {
  for (const auto& c : oracle()["resultant"]) {
    const Poly a = poly_from_json(c["a"]);
    const Poly b = poly_from_json(c["b"]);
    EXPECT_EQ(resultant(a, b), parse_rational(c["resultant"].get<std::string>())) << to_string(a) << " / " << to_string(b);
  }
}

TEST(Poly, InterpolationRecoversPolynomial) {
  const Poly p = P({3, -1, 0, 2});
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.emplace_back(i);
    ys.push_back(p(Rational(i)));
  }
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(Parse, GrammarAndRoundTrip) {
  EXPECT_EQ(parse_poly("x^5 + x - 1"), P({-1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(parse_poly("1/2*x^2 + 1/2*x"), Poly({Rational(0), make_rational(1, 2), make_rational(1, 2)}));
  EXPECT_EQ(parse_poly(" x ^ 3 "), P({0, 0, 0, 1}));
  EXPECT_EQ(parse_poly("-x + 2*x"), P({0, 1}));
  for (const char* text : {"x^3+x^2-1", "1/2*x^2+1/2*x", "-3/7*x^4+x", "5"}) {
    EXPECT_EQ(to_string(parse_poly(text)), text);
  }
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    parse_poly("x^2 + + 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 7);
  }
  try {
    parse_poly("x^", 4, 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 13);
  }
  EXPECT_THROW(parse_poly("3x"), ParseError);
  EXPECT_THROW(parse_poly("1/0*x"), ParseError);
  EXPECT_THROW(parse_poly("x^-1"), ParseError);
}

TEST(Roots, SturmCountsAndIsolation) {
  const Poly p = P({-1, 0, 1}) * P({-2, 0, 1});  // roots +-1, +-sqrt2
  SturmSequence s(p);
  EXPECT_EQ(s.count(Rational(-10), Rational(10)), 4);
  EXPECT_EQ(s.count(Rational(0), Rational(1)), 1);  // (0, 1] contains 1
  EXPECT_EQ(s.count_closed(Rational(-1), Rational(1)), 2);
  const auto ivs = sturm_isolate(p);
  ASSERT_EQ(ivs.size(), 4u);
  for (std::size_t i = 1; i < ivs.size(); ++i) EXPECT_LE(ivs[i - 1].hi(), ivs[i].lo());
  const auto narrow = refine_root(p, ivs[3], make_rational(1, 1000000));
  EXPECT_LE(narrow.width(), make_rational(1, 1000000));
  EXPECT_LT(narrow.lo() * narrow.lo(), Rational(2));
  EXPECT_GT(narrow.hi() * narrow.hi(), Rational(2));
}

TEST(Roots, MatchOracleRealRoots) {
  for (const auto& c : oracle()["real_roots"]) {
    const Poly p = poly_from_json(c["poly"]);
    const auto ivs = sturm_isolate(p);
    const auto& expected = c["real_roots"];
    ASSERT_EQ(ivs.size(), expected.size()) << to_string(p);
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      const auto iv = refine_root(p, ivs[i], make_rational(1, 1000000000));
      const Rational approx = testing::decimal_to_rational(expected[i].get<std::string>());
      EXPECT_LE(abs(iv.midpoint() - approx), make_rational(1, 100000000)) << to_string(p) << " root " << i;
    }
  }
}

TEST(Roots, RationalRoots) {
  const Poly p = P({-1, 2}) * P({3, 1}) * P({1, 0, 1});
  EXPECT_EQ(rational_roots(p), (std::vector<Rational>{Rational(-3), make_rational(1, 2)}));
}

std::vector<std::pair<Poly, int>> terms_of(const Factorization& f) {
  std::vector<std::pair<Poly, int>> out;
  for (const auto& t : f.terms) out.emplace_back(t.factor, t.multiplicity);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

TEST(Factor, MatchesOracle) {
  for (const auto& c : oracle()["factor"]) {
    const Poly p = poly_from_json(c["poly"]);
    const Factorization f = factor_over_q(p);
    EXPECT_EQ(f.product(), p);
    EXPECT_EQ(f.content, parse_rational(c["content"].get<std::string>())) << to_string(p);
    std::vector<std::pair<Poly, int>> expected;
    for (const auto& t : c["factors"]) expected.emplace_back(poly_from_json(t["factor"]), t["multiplicity"].get<int>());
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    EXPECT_EQ(terms_of(f), expected) << to_string(p);
  }
}

TEST(Factor, FifthDegreeTrinomialSplits) {
  const Factorization f = factor_over_q(P({-1, 1, 0, 0, 0, 1}));
  ASSERT_EQ(f.terms.size(), 2u);
  EXPECT_EQ(f.terms[0].factor, P({1, -1, 1}));
  EXPECT_EQ(f.terms[1].factor, P({-1, 0, 1, 1}));
}

TEST(Factor, DegreeCap) {
  const Poly big = P({-1, 1}).pow(13) + P({1});
  EXPECT_THROW(factor_over_q(big), DegreeCapExceeded);
  set_degree_cap(14);
  EXPECT_NO_THROW(factor_over_q(P({-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})));
  set_degree_cap(std::nullopt);
  EXPECT_EQ(degree_cap(), 12);
  EXPECT_THROW(factor_over_q(Poly{}), ZeroPolynomialError);
}

TEST(Factor, Certificates) {
  EXPECT_EQ(quick_irreducibility(P({-2, 0, 0, 0, 1})), IrreducibilityCertificate::eisenstein);
  EXPECT_EQ(quick_irreducibility(P({1, 1})), IrreducibilityCertificate::linear);
  EXPECT_EQ(quick_irreducibility(P({-1, 0, 1, 1})), IrreducibilityCertificate::no_rational_root_low_degree);
  // x^4 + 1 is reducible modulo every prime but irreducible over Q.
  EXPECT_EQ(quick_irreducibility(P({1, 0, 0, 0, 1})), IrreducibilityCertificate::none);
  EXPECT_EQ(certify_irreducible(P({1, 0, 0, 0, 1})), IrreducibilityCertificate::kronecker);
  EXPECT_EQ(eisenstein(P({3, 0, 0, 1}), Integer(3), false).verdict, EisensteinVerdict::irreducible_certified);
  const auto rev = eisenstein(P({1, 0, 0, 0, 0, 0, -7}).reversal().reversal() * Rational(-1), Integer(7), true);
  EXPECT_EQ(rev.verdict, EisensteinVerdict::irreducible_certified);
  EXPECT_TRUE(rev.via_reversal);
  EXPECT_THROW(eisenstein(P({2, 1}), Integer(4), false), DomainError);
}

TEST(Factor, KroneckerDivisor) {
  const auto d = kronecker_divisor(P({1, 0, 0, 0, 1}) * P({1, 1, 1}), 2);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(divides(*d, P({1, 0, 0, 0, 1}) * P({1, 1, 1})));
  EXPECT_FALSE(kronecker_divisor(P({1, 0, 0, 0, 1}), 2).has_value());
}

TEST(ModP, FactorDegreesAndProbe) {
  const auto degs = modp_factor_degrees(P({1, 0, 0, 0, 1}), 3);
  ASSERT_TRUE(degs.has_value());
  EXPECT_EQ(*degs, (std::vector<int>{2, 2}));
  EXPECT_FALSE(modp_factor_degrees(P({1, 2, 1}), 5).has_value());  // not squarefree
  const auto probe = probe_factor_degrees(P({-1, -1, 0, 0, 0, 1}));  // x^5 - x - 1
  EXPECT_TRUE(probe.possible.empty());
  EXPECT_EQ(proper_subset_sums({1, 2}), (std::set<int>{1, 2}));
}

}  // namespace
}  // namespace bssrw
