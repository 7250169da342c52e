#include <benchmark/benchmark.h>

#include "cantor/cantor_sentence.hpp"
#include "cantor/census.hpp"
#include "cantor/scheme.hpp"
#include "cantor/semantics.hpp"

using namespace cantor;

static void BM_ExpandBuiltinScheme(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expand(builtin_scheme()));
}
BENCHMARK(BM_ExpandBuiltinScheme);

static void BM_ValidateBuiltinScheme(benchmark::State& state) {
  const auto& shortcuts = builtin_scheme().shortcuts();
  for (auto _ : state) benchmark::DoNotOptimize(validate_scheme(shortcuts));
}
BENCHMARK(BM_ValidateBuiltinScheme);

// Evaluates the Cantor sentence over every digraph on range(0) vertices.
static void BM_PhiAllDigraphs(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const CompiledFormula phi(emit_phi());
  const auto graphs = enumerate_digraphs(n);
  EvalOptions options;
  options.memoize = state.range(1) != 0;
  for (auto _ : state) {
    std::size_t count = 0;
    for (const Digraph& g : graphs) count += phi.evaluate(g, {}, options);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graphs.size()));
}
BENCHMARK(BM_PhiAllDigraphs)
    ->ArgNames({"n", "memo"})
    ->Args({2, 0})
    ->Args({2, 1})
    ->Args({3, 0})
    ->Args({3, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& state) {
  CensusOptions options;
  options.jobs = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(static_cast<std::size_t>(state.range(0)), options));
  }
}
BENCHMARK(BM_Census)
    ->ArgNames({"n", "jobs"})
    ->Args({3, 1})
    ->Args({4, 1})
    ->Args({4, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

static void BM_CensusPhiMethod(benchmark::State& state) {
  CensusOptions options;
  options.method = CantorMethod::Phi;
  for (auto _ : state) benchmark::DoNotOptimize(census(3, options));
}
BENCHMARK(BM_CensusPhiMethod)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
