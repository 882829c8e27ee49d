#include <benchmark/benchmark.h>

#include <cmath>

#include "gfn/gfunction.hpp"
#include "gfn/rotor.hpp"

namespace {

const gfn::QuadratureConfig cfg{};

void BM_g_real_axis(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gfn::g(1, {1.0, 0.0}, cfg).value);
}
BENCHMARK(BM_g_real_axis);

void BM_g_complex(benchmark::State& state) {
  const gfn::Complex z{1.5, -2.598076211353316};
  for (auto _ : state) benchmark::DoNotOptimize(gfn::g(1, z, cfg).value);
}
BENCHMARK(BM_g_complex);

void BM_g_oscillatory_boundary(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gfn::g(1, {0.0, -3.0}, cfg).value);
}
BENCHMARK(BM_g_oscillatory_boundary);

void BM_polar_parts(benchmark::State& state) {
  const gfn::PolarArg arg{3.0, M_PI / 3.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(gfn::g_polar_parts(1, arg, cfg));
}
BENCHMARK(BM_polar_parts);

void BM_susceptibility_point(benchmark::State& state) {
  const gfn::RotorSpec rotor{1.0, 1.0, 1.0};
  const gfn::ResponseParams params{1.0, 1.0, 2.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(gfn::susceptibility_ratio(rotor, params, cfg));
}
BENCHMARK(BM_susceptibility_point);

}  // namespace

BENCHMARK_MAIN();
