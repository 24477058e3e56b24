#include <gtest/gtest.h>

#include "bssrw/cake/fairness.hpp"
#include "bssrw/error.hpp"
#include "bssrw/protocols/protocols.hpp"
#include "support/corpus.hpp"

namespace bssrw {
namespace {

using AN = AlgebraicNumber;
using testing::corpus;
using testing::load;

TEST(CutAndChoose, LinearVersusQuintic) {
  const auto ms = parse_measures("a: x\nb: x^5");
  const ProtocolRun run = cut_and_choose(ms[0], ms[1]);
  ASSERT_EQ(run.session.records().size(), 2u);
  EXPECT_EQ(run.session.records()[0].kind, QueryKind::cut);
  EXPECT_EQ(run.session.records()[0].answer, AN(make_rational(1, 2)));
  EXPECT_EQ(run.session.records()[1].kind, QueryKind::eval);
  // b values [0, 1/2] at 1/32 so it takes the right half.
  const auto& right = run.allocation.pieces[1];
  ASSERT_EQ(right.size(), 1u);
  EXPECT_EQ(right[0].lo, AN(make_rational(1, 2)));
  EXPECT_EQ(run.session.tower().total_degree(), 1);
}

TEST(CutAndChoose, SteepCutter) {
  const auto ms = parse_measures("a: x^5\nb: x");
  const ProtocolRun run = cut_and_choose(ms[0], ms[1]);
  const AN cut = run.session.records()[0].answer;
  EXPECT_EQ(pow(cut, 5), AN(make_rational(1, 2)));
  EXPECT_EQ(run.session.tower().total_degree(), 5);
  EXPECT_TRUE(check_fairness(run.allocation, ms).envy_free);
}

TEST(Dispatch, NamesAndPlayerCounts) {
  EXPECT_EQ(protocol_names().size(), 4u);
  const auto two = parse_measures("a: x\nb: x^2");
  const auto three = parse_measures("a: x\nb: x^2\nc: x^3");
  EXPECT_THROW(run_protocol("cut_and_choose", three), DomainError);
  EXPECT_THROW(run_protocol("selfridge_conway", two), DomainError);
  EXPECT_THROW(run_protocol("last_diminisher", parse_measures("a: x")), DomainError);
  EXPECT_THROW(run_protocol("divide_and_guess", two), DomainError);
  EXPECT_EQ(run_protocol("even_paz", two).protocol, "even_paz");
}

TEST(EvenPaz, SinglePlayerTakesAll) {
  const ProtocolRun run = even_paz(parse_measures("a: x^3"));
  ASSERT_EQ(run.allocation.pieces.size(), 1u);
  EXPECT_EQ(run.session.rw_query_count(), 0u);
}

TEST(LastDiminisher, IdenticalMeasuresSplitEvenly) {
  const auto ms = parse_measures("a: x\nb: x\nc: x");
  const ProtocolRun run = last_diminisher(ms);
  const auto r = check_fairness(run.allocation, ms);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.values[i][i], AN(make_rational(1, 3)));
}

class CorpusRun : public ::testing::TestWithParam<std::size_t> {};

TEST_P(CorpusRun, StatedGuaranteesHold) {
  const auto& c = corpus()[GetParam()];
  const auto ms = load(c);
  for (const auto& name : testing::applicable_protocols(ms.size())) {
    SCOPED_TRACE(c.name + " / " + name);
    const ProtocolRun run = run_protocol(name, ms);
    ASSERT_NO_THROW(run.allocation.validate());
    const auto r = check_fairness(run.allocation, ms);
    for (Guarantee g : run.guarantees) {
      if (g == Guarantee::proportional) EXPECT_TRUE(r.proportional);
      if (g == Guarantee::envy_free) EXPECT_TRUE(r.envy_free);
    }
    for (const auto& rec : run.session.records()) {
      if (rec.kind != QueryKind::cut) continue;
      const AN got = ms[rec.player].value(rec.args[0], rec.answer);
      EXPECT_EQ(got, rec.args[1]);
    }
    EXPECT_EQ(run.session.tower().steps().size(), run.session.rw_query_count());
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusRun, ::testing::Range<std::size_t>(0, 20));

}  // namespace
}  // namespace bssrw
