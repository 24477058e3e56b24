#include <benchmark/benchmark.h>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/cake/fairness.hpp"
#include "bssrw/cake/session.hpp"
#include "bssrw/certificates/certificate.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/parse.hpp"
#include "bssrw/exact/roots.hpp"
#include "bssrw/protocols/protocols.hpp"

namespace {

using namespace bssrw;

void BM_FactorTrinomial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Poly p = Poly::monomial(Rational(1), d) + Poly::from_integers({-1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_q(p));
}
BENCHMARK(BM_FactorTrinomial)->DenseRange(5, 12);

void BM_SturmIsolate(benchmark::State& state) {
  Poly p = Poly::from_integers({1});
  for (long r = 1; r <= state.range(0); ++r) p *= Poly::from_integers({-r, 3});
  for (auto _ : state) benchmark::DoNotOptimize(sturm_isolate(p));
}
BENCHMARK(BM_SturmIsolate)->RangeMultiplier(2)->Range(2, 16);

// Fresh nodes every iteration so cached minimal polynomials are not reused.
void BM_MinpolyRadicalSum(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const AlgebraicNumber s = AlgebraicNumber(2).nth_root(k) + AlgebraicNumber(3).nth_root(2);
    benchmark::DoNotOptimize(s.minpoly());
  }
}
BENCHMARK(BM_MinpolyRadicalSum)->Arg(2)->Arg(3)->Arg(5);

void BM_EqualityTest(benchmark::State& state) {
  for (auto _ : state) {
    const AlgebraicNumber r2 = AlgebraicNumber(2).nth_root(2);
    const AlgebraicNumber r3 = AlgebraicNumber(3).nth_root(2);
    benchmark::DoNotOptimize((r2 + r3) * (r2 + r3) == AlgebraicNumber(5) + AlgebraicNumber(2) * r2 * r3);
  }
}
BENCHMARK(BM_EqualityTest);

void BM_Protocol(benchmark::State& state, const char* protocol, const char* measures) {
  const auto ms = parse_measures(measures);
  for (auto _ : state) benchmark::DoNotOptimize(run_protocol(protocol, ms));
}
BENCHMARK_CAPTURE(BM_Protocol, cut_and_choose_quintic, "cut_and_choose", "a: x^5\nb: x");
BENCHMARK_CAPTURE(BM_Protocol, even_paz_three, "even_paz", "a: x\nb: x^2\nc: x^3");
BENCHMARK_CAPTURE(BM_Protocol, last_diminisher_three, "last_diminisher", "a: x\nb: x^2\nc: x^3");
BENCHMARK_CAPTURE(BM_Protocol, selfridge_conway_quintic, "selfridge_conway", "a: x^5\nb: x\nc: x");

void BM_CheckImpossibilityEquitable(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_impossibility_equitable(d, false));
}
BENCHMARK(BM_CheckImpossibilityEquitable)->DenseRange(5, 12);

void BM_MaxWelfare(benchmark::State& state) {
  const auto ms = parse_measures("a: x\nb: x^3\nc: 3*x^2-2*x^3");
  for (auto _ : state) benchmark::DoNotOptimize(max_welfare(ms));
}
BENCHMARK(BM_MaxWelfare);

}  // namespace

BENCHMARK_MAIN();
