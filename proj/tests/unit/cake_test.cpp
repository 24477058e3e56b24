#include <gtest/gtest.h>

#include "bssrw/cake/allocation.hpp"
#include "bssrw/cake/fairness.hpp"
#include "bssrw/cake/measure.hpp"
#include "bssrw/cake/session.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/parse.hpp"

namespace bssrw {
namespace {

using AN = AlgebraicNumber;

Measure M(const char* poly, const char* name = "m") { return Measure(parse_poly(poly), name); }
AN Q(long p, long q = 1) { return AN(make_rational(p, q)); }

TEST(Measure, Validation) {
  EXPECT_NO_THROW(M("x"));
  EXPECT_NO_THROW(M("3*x^2-2*x^3"));
  EXPECT_NO_THROW(M("4*x^3-6*x^2+3*x"));  // density vanishes at 1/2 without changing sign
  EXPECT_THROW(M("x - 1"), InvalidMeasure);
  EXPECT_THROW(M("2*x"), InvalidMeasure);
  EXPECT_THROW(M("2*x^2 - x"), InvalidMeasure);  // decreasing near 0
  EXPECT_EQ(M("x^5").monomial_degree(), 5u);
  EXPECT_FALSE(M("1/2*x^2+1/2*x").monomial_degree().has_value());
  EXPECT_EQ(M("x^3").density(), parse_poly("3*x^2"));
}

TEST(Measure, Values) {
  const Measure m = M("x^2");
  EXPECT_EQ(m.value(Q(1, 2), Q(1)), Q(3, 4));
  EXPECT_EQ(m.cdf_at(AN(2).nth_root(2) / AN(2)), Q(1, 2));
}

TEST(Measure, ParseFile) {
  const auto ms = parse_measures("# players\nalice: x\n\nbob: x^5   # steep\n");
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].label(), "alice");
  EXPECT_EQ(ms[1].cdf(), parse_poly("x^5"));
}

TEST(Measure, ParseErrors) {
  try {
    parse_measures("a: x\nb: x^2 + ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 10);
  }
  try {
    parse_measures("a: x\nb x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 1);
  }
  EXPECT_THROW(parse_measures("a: x\na: x^2"), ParseError);
  EXPECT_THROW(parse_measures("# nothing\n"), ParseError);
  try {
    parse_measures("a: x\nb:  x - 1");
    FAIL();
  } catch (const InvalidMeasure& e) {
    EXPECT_EQ(std::string(e.what()).rfind("2:5: b: cdf(0) must be 0", 0), 0u) << e.what();
  }
}

TEST(Session, EvalCutAndTranscript) {
  Session s(parse_measures("a: x\nb: x^5"));
  const AN y = s.cut(1, Q(0), Q(1, 2));
  EXPECT_EQ(pow(y, 5), Q(1, 2));
  EXPECT_EQ(s.eval(0, Q(0), y), y);
  EXPECT_EQ(s.eval(1, Q(0), y), Q(1, 2));
  EXPECT_EQ(s.rw_query_count(), 3u);
  EXPECT_EQ(s.records()[0].kind, QueryKind::cut);
  EXPECT_EQ(s.records()[0].player, 1u);
  EXPECT_EQ(s.tower().total_degree(), 5);
  EXPECT_EQ(s.tower().steps()[0].kind, StepKind::radical);
  EXPECT_EQ(s.arith(ArithOp::add, Q(1), y), Q(1) + y);
  EXPECT_EQ(s.compare(y, Q(1)), -1);
  EXPECT_EQ(s.bss_op_count(), 2u);
  const std::string dump = s.dump(6);
  EXPECT_NE(dump.find("#1 b cut args=(0, 1/2) answer=0.870550… (minpoly: 2*x^5-1)"), std::string::npos) << dump;
  EXPECT_NE(dump.find("step 1: deg=5 kind=radical^5 source=#1"), std::string::npos);
}

TEST(Session, CutEdgeCases) {
  Session s(parse_measures("a: x^2\nb: 3*x^2-2*x^3"));
  EXPECT_EQ(s.cut(0, Q(1, 3), Q(0)), Q(1, 3));
  EXPECT_EQ(s.cut(0, Q(1, 3), Q(8, 9)), Q(1));
  const AN c = s.cut(1, Q(0), Q(1, 2));
  EXPECT_EQ(c, Q(1, 2));  // symmetric density
  const AN d = s.cut(1, Q(0), Q(1, 4));
  EXPECT_EQ(s.eval(1, Q(0), d), Q(1, 4));
  EXPECT_EQ(s.tower().steps().back().kind, StepKind::trivial);
}

TEST(Session, QueryErrors) {
  Session s(parse_measures("a: x"));
  EXPECT_THROW(s.eval(0, Q(1, 2), Q(1, 3)), QueryError);
  EXPECT_THROW(s.eval(0, Q(-1), Q(1)), QueryError);
  EXPECT_THROW(s.cut(0, Q(1, 2), Q(3, 4)), QueryError);
  EXPECT_THROW(s.cut(0, Q(2), Q(0)), QueryError);
  EXPECT_THROW(s.eval(3, Q(0), Q(1)), QueryError);
  EXPECT_EQ(s.rw_query_count(), 0u);
}

Allocation two_way(const AN& cut, bool first_left = true) {
  Allocation a;
  a.pieces = {{Piece{Q(0), cut}}, {Piece{cut, Q(1)}}};
  if (!first_left) std::swap(a.pieces[0], a.pieces[1]);
  return a;
}

TEST(Allocation, ValidationAndCutpoints) {
  EXPECT_NO_THROW(two_way(Q(1, 3)).validate());
  Allocation gap;
  gap.pieces = {{Piece{Q(0), Q(1, 3)}}, {Piece{Q(1, 2), Q(1)}}};
  EXPECT_THROW(gap.validate(), DomainError);
  Allocation overlap;
  overlap.pieces = {{Piece{Q(0), Q(2, 3)}}, {Piece{Q(1, 2), Q(1)}}};
  EXPECT_THROW(overlap.validate(), DomainError);
  Allocation split;
  split.pieces = {{Piece{Q(0), Q(1, 4)}, Piece{Q(3, 4), Q(1)}}, {Piece{Q(1, 4), Q(3, 4)}}};
  EXPECT_NO_THROW(split.validate());
  const auto cuts = split.cutpoints();
  ASSERT_EQ(cuts.size(), 2u);
  EXPECT_EQ(cuts[0], Q(1, 4));
}

TEST(Fairness, WitnessesAndValues) {
  const auto ms = parse_measures("a: x\nb: x^5");
  const auto r = check_fairness(two_way(Q(1, 2)), ms);
  EXPECT_TRUE(r.proportional);
  EXPECT_TRUE(r.envy_free);
  EXPECT_FALSE(r.equitable);
  ASSERT_TRUE(r.equitable_witness.has_value());
  EXPECT_EQ(r.values[1][1], Q(31, 32));
  EXPECT_EQ(r.values[1][0], Q(1, 32));

  const auto swapped = check_fairness(two_way(Q(1, 2), false), ms);
  EXPECT_FALSE(swapped.proportional);
  EXPECT_FALSE(swapped.envy_free);
  ASSERT_TRUE(swapped.proportional_witness.has_value());
  EXPECT_EQ(swapped.proportional_witness->i, 1u);
  EXPECT_EQ(swapped.proportional_witness->lhs, Q(1, 32));
  EXPECT_EQ(swapped.proportional_witness->rhs, Q(1, 2));
}

TEST(Fairness, EquitableCutOfLinearAndQuintic) {
  const auto ms = parse_measures("a: x\nb: x^5");
  const AN t = AN::root_of(parse_poly("x^3+x^2-1"), DyadicInterval(Rational(0), Rational(1)));
  // a gets [0, t], b gets [t, 1]: t = 1 - t^5.
  const auto r = check_fairness(two_way(t), ms);
  EXPECT_TRUE(r.equitable);
  EXPECT_EQ(r.values[0][0], r.values[1][1]);
  EXPECT_THROW(check_fairness(two_way(t), parse_measures("a: x")), DomainError);
}

TEST(Welfare, LinearVersusCubic) {
  const auto ms = parse_measures("a: x\nb: x^3");
  const Allocation best = max_welfare(ms);
  const auto cuts = best.cutpoints();
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0], AN(3).nth_root(2) / AN(3));
  EXPECT_EQ(welfare(best, ms), Q(1) + Q(2, 9) * AN(3).nth_root(2));
  EXPECT_GT(welfare(best, ms), welfare(two_way(Q(1, 2)), ms));
}

TEST(Welfare, IdenticalMeasuresGoToFirstPlayer) {
  const auto ms = parse_measures("a: x^2\nb: x^2");
  const Allocation best = max_welfare(ms);
  EXPECT_TRUE(best.cutpoints().empty());
  EXPECT_EQ(welfare(best, ms), Q(1));
  EXPECT_EQ(best.pieces[0].size(), 1u);
  EXPECT_TRUE(best.pieces[1].empty());
}

TEST(Describe, Format) {
  const auto ms = parse_measures("a: x\nb: x^2");
  EXPECT_EQ(describe(two_way(Q(1, 2)), ms), "a: [0, 1/2] value=1/2\nb: [1/2, 1] value=3/4\n");
}

}  // namespace
}  // namespace bssrw
