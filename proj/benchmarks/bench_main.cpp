#include <benchmark/benchmark.h>

#include "crdfa/crdfa.hpp"

using namespace crdfa;

namespace {

void BM_FindWitnessCerny(benchmark::State& state) {
  const Automaton a = cerny(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindWitnessCerny)->RangeMultiplier(2)->Range(16, 256)->Complexity()->Unit(benchmark::kMillisecond);

void BM_FindWitnessFig2Style(benchmark::State& state) {
  const Automaton a = figure2_style(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindWitnessFig2Style)->RangeMultiplier(2)->Range(16, 256)->Complexity()->Unit(benchmark::kMillisecond);

void BM_FindAllWitnessesFig1(benchmark::State& state) {
  const Automaton a = figure1();
  for (auto _ : state) benchmark::DoNotOptimize(find_all_witnesses(a));
}
BENCHMARK(BM_FindAllWitnessesFig1);

void BM_IsWitnessCandidate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Automaton a = cerny(n);
  const StateSet s = StateSet::of(n, {0, static_cast<State>(n / 2)});
  for (auto _ : state) benchmark::DoNotOptimize(is_witness_candidate(a, s));
}
BENCHMARK(BM_IsWitnessCandidate)->RangeMultiplier(4)->Range(16, 1024);

void BM_ShortExtendingWord(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Automaton a = figure2_style(n);
  const StateSet s = StateSet::of(n, {0, static_cast<State>(n - 2)});
  for (auto _ : state) benchmark::DoNotOptimize(find_short_properly_extending_word(a, s));
}
BENCHMARK(BM_ShortExtendingWord)->RangeMultiplier(2)->Range(16, 512);

void BM_ResetWordCerny(benchmark::State& state) {
  const Automaton a = cerny(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reset_word(a));
}
BENCHMARK(BM_ResetWordCerny)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_OracleAtlas(benchmark::State& state) {
  const Automaton a = cerny(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_atlas(a));
}
BENCHMARK(BM_OracleAtlas)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
