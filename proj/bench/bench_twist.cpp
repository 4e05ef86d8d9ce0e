// Serial reference elimination against the OpenMP path.

#include <benchmark/benchmark.h>

#include "homalg/constructions.hpp"
#include "homalg/homstruct.hpp"

using namespace homalg;

namespace {

Algebra sedenions() { return cayley_dickson_chain(4).base(); }
Algebra octonions() { return cayley_dickson_chain(3).base(); }

Algebra random_dim(std::size_t n) {
  GeneratorConfig cfg;
  cfg.seed = 7;
  cfg.dim = n;
  cfg.field = Field::prime(101);
  cfg.pool = default_pool(cfg.field);
  return random_algebra(cfg);
}

void BM_TwistSpace(benchmark::State& state, Algebra (*make)(), Execution exec) {
  const Algebra a = make();
  for (auto _ : state) benchmark::DoNotOptimize(twist_space(a, exec).dim());
}

void BM_TwistRandom(benchmark::State& state, Execution exec) {
  const Algebra a = random_dim(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twist_space(a, exec).dim());
}

void BM_HuT(benchmark::State& state, Algebra (*make)(), Execution exec) {
  const Algebra a = make();
  for (auto _ : state) benchmark::DoNotOptimize(hu_t(a, Side::left, exec).dim());
}

void BM_AcConditions(benchmark::State& state, Algebra (*make)(), Execution exec) {
  const Algebra a = make();
  for (auto _ : state) benchmark::DoNotOptimize(ac_left_conditions(a, exec).dim());
}

}  // namespace

#define HOMALG_BOTH(fn, name, make)                                                                  \
  BENCHMARK_CAPTURE(fn, name##_serial, make, Execution::serial)->Unit(benchmark::kMillisecond); \
  BENCHMARK_CAPTURE(fn, name##_openmp, make, Execution::openmp)->Unit(benchmark::kMillisecond)

HOMALG_BOTH(BM_TwistSpace, octonions, octonions);
HOMALG_BOTH(BM_TwistSpace, sedenions, sedenions);
HOMALG_BOTH(BM_HuT, sedenions, sedenions);
HOMALG_BOTH(BM_AcConditions, sedenions, sedenions);
BENCHMARK_CAPTURE(BM_TwistRandom, serial, Execution::serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TwistRandom, openmp, Execution::openmp)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
