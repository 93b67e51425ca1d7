#include <benchmark/benchmark.h>

#include "quatroid/matrix.hpp"

using namespace quatroid;

static void BM_RrefGF4(benchmark::State& state) {
  const Field& f = Field::gf(4);
  auto m = ExactMatrix::hconcat(ExactMatrix::identity(f, 8), ExactMatrix::build_Dn(f, 8));
  for (auto _ : state) benchmark::DoNotOptimize(m.rref().rank);
}
BENCHMARK(BM_RrefGF4);

BENCHMARK_MAIN();
