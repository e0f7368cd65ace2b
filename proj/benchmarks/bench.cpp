#include <benchmark/benchmark.h>

#include "problogic/bernoulli.hpp"
#include "problogic/proof_synthesis.hpp"
#include "problogic/qnum/qnumber.hpp"
#include "problogic/syntax.hpp"

using namespace problogic;

namespace {

void BM_SynthesizeProof(benchmark::State& state) {
  const char* goals[] = {"A -> A", "(A -> B) -> (!B -> !A)", "((A -> B) -> A) -> A", "(A -> B -> C) -> (A -> B) -> A -> C"};
  auto goal = parse_formula(goals[state.range(0)]).ast;
  std::size_t lines = 0;
  for (auto _ : state) {
    auto d = synthesize_proof(goal);
    lines = d.lines.size();
    benchmark::DoNotOptimize(d);
  }
  state.counters["lines"] = static_cast<double>(lines);
}
BENCHMARK(BM_SynthesizeProof)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CheckProof(benchmark::State& state) {
  auto d = synthesize_proof(parse_formula("(A -> B -> C) -> (A -> B) -> A -> C").ast);
  for (auto _ : state) benchmark::DoNotOptimize(check_deduction(d));
  state.counters["lines"] = static_cast<double>(d.lines.size());
}
BENCHMARK(BM_CheckProof)->Unit(benchmark::kMillisecond);

void BM_RangeProb(benchmark::State& state) {
  auto r = static_cast<std::size_t>(state.range(0));
  Rational p = ratio(1, 2), eps = ratio(1, 20), rq = Integer(static_cast<unsigned long>(r));
  for (auto _ : state) benchmark::DoNotOptimize(range_prob(r, rq * (p - eps), rq * (p + eps), p));
}
BENCHMARK(BM_RangeProb)->RangeMultiplier(10)->Range(100, 10'000)->Unit(benchmark::kMillisecond);

void BM_SimulateFrequencies(benchmark::State& state) {
  auto ts = TestSequence::fresh_atoms(1000, ratio(1, 3));
  auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_frequencies(ts, 1000, 42, threads));
}
BENCHMARK(BM_SimulateFrequencies)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_QEqual(benchmark::State& state) {
  using namespace problogic::qnum;
  auto x = QNumber::index() * QNumber::reciprocal_index() + QNumber::periodic({}, {ratio(1, 2), ratio(-1, 2)});
  auto y = QNumber::standard(1) + QNumber::periodic({}, {ratio(1, 2), ratio(-1, 2)});
  auto opaque = QNumber::opaque([](std::uint64_t n) { return Rational(Integer(static_cast<unsigned long>(n % 7))); });
  bool structured = state.range(0) == 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(structured ? q_equal(x, y) : q_equal(opaque, opaque + QNumber::reciprocal_index()));
  }
}
BENCHMARK(BM_QEqual)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
