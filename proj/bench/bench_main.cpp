// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "osg/enumeration.hpp"
#include "osg/generation.hpp"
#include "osg/verifier.hpp"

namespace {

const std::vector<osg::OrderedSemigroup>& corpus3() {
  static const auto c = osg::generate_corpus({3, false});
  return c;
}

void BM_TablesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(osg::enumerate_associative_tables(static_cast<unsigned>(state.range(0))));
}
void BM_TablesSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(osg::enumerate_associative_tables_serial(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_TablesParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TablesSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SuiteParallel(benchmark::State& state) {
  const auto checks = osg::parse_check_list("all");
  for (auto _ : state) benchmark::DoNotOptimize(osg::run_suite(corpus3(), {1, 2, 3}, checks));
}
void BM_SuiteSerial(benchmark::State& state) {
  const auto checks = osg::parse_check_list("all");
  for (auto _ : state) benchmark::DoNotOptimize(osg::run_suite_serial(corpus3(), {1, 2, 3}, checks));
}
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);

void BM_IdealsPruned(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& s : corpus3())
      benchmark::DoNotOptimize(osg::enumerate_ideals(s, osg::IdealKind::MBiInterior, osg::Potency(2)));
}
void BM_IdealsBruteForce(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& s : corpus3())
      benchmark::DoNotOptimize(osg::brute_force_ideals(s, osg::IdealKind::MBiInterior, osg::Potency(2)));
}
BENCHMARK(BM_IdealsPruned)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealsBruteForce)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
