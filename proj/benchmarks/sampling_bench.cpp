#include <benchmark/benchmark.h>

#include "cycle_span/monte_carlo.hpp"
#include "cycle_span/profile.hpp"
#include "cycle_span/samplers.hpp"

namespace {

using namespace cycle_span;

void BM_SampleUniform(benchmark::State& state) {
  RandomSource rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform(n, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleUniform)->Arg(100)->Arg(10000);

void BM_SampleConditional(benchmark::State& state) {
  RandomSource rng(2);
  const SpanParams params(state.range(0), state.range(0) / 10);
  const std::int64_t l = state.range(0) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(sample_conditional_span(params, l, rng));
}
BENCHMARK(BM_SampleConditional)->Arg(100)->Arg(10000);

void BM_SpanLength(benchmark::State& state) {
  RandomSource rng(3);
  const Permutation p = sample_uniform(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(span_length(p, 10));
}
BENCHMARK(BM_SpanLength)->Arg(100)->Arg(10000);

void BM_EncodeDecode(benchmark::State& state) {
  RandomSource rng(4);
  const Permutation p = sample_uniform(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(decode(encode(p, 5)));
}
BENCHMARK(BM_EncodeDecode)->Arg(100)->Arg(1000);

void BM_MonteCarlo(benchmark::State& state) {
  const SpanParams params(100, 10);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(params, 100000, 7, threads));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
