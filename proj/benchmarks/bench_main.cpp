#include <benchmark/benchmark.h>

#include "picross/algebra.hpp"
#include "picross/random.hpp"
#include "picross/universal.hpp"

namespace {

void BM_GenerateTruncatedShift(benchmark::State& state) {
  const auto j = picross::shift_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(picross::generate({j}, 1600).dim());
}
BENCHMARK(BM_GenerateTruncatedShift)->DenseRange(1, 5);

picross::Word sample_word(picross::CounterRng& rng, int length) {
  picross::Word w(static_cast<std::size_t>(length));
  for (auto& l : w) l = rng.coin() ? picross::Letter::V : picross::Letter::VStar;
  return w;
}

void BM_Normalize(benchmark::State& state) {
  picross::CounterRng rng(7, 0);
  const auto w = sample_word(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(picross::normalize(w));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(2)->Range(4, 64);

void BM_EvaluateGrid(benchmark::State& state) {
  const picross::Evaluator ev(picross::Assignment::grid(static_cast<int>(state.range(0))));
  picross::CounterRng rng(7, 1);
  const auto nf = picross::normalize(sample_word(rng, 12));
  for (auto _ : state) benchmark::DoNotOptimize(ev.evaluate_sparse(nf));
}
BENCHMARK(BM_EvaluateGrid)->Arg(16)->Arg(24)->Arg(48);

}  // namespace
BENCHMARK_MAIN();
