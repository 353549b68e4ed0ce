#include <benchmark/benchmark.h>

#include "bohr/radius.hpp"
#include "bohr/specfun.hpp"
#include "bohr/verify.hpp"

namespace {

using bohr::ClassKind;

bohr::ClassSpec spec_for(int index) {
  switch (index) {
    case 0:
      return {ClassKind::ph0_alpha, 0.4};
    case 1:
      return {ClassKind::ph0_m, 0.6};
    default:
      return {ClassKind::wh0_alpha, 0.4};
  }
}

void BM_li2(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(bohr::li2(x));
}
BENCHMARK(BM_li2)->Arg(-900)->Arg(250)->Arg(900)->Arg(999);

void BM_phi(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const bohr::FunctionalParams params(2, 5, 1, 1);
  const double r = static_cast<double>(state.range(1)) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr::phi(spec, params, bohr::Convention::exact_a1, r));
  }
}
BENCHMARK(BM_phi)->ArgsProduct({{0, 1, 2}, {300, 980, 999}});

void BM_solve_radius(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const bohr::FunctionalParams params(2, static_cast<int>(state.range(1)), 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::solve_radius(spec, params).radius);
}
BENCHMARK(BM_solve_radius)->ArgsProduct({{0, 1, 2}, {1, 8}});

void BM_check_root_and_sharpness(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const bohr::FunctionalParams params(1, 5, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr::check_root_and_sharpness(spec, params).passed);
  }
}
BENCHMARK(BM_check_root_and_sharpness)->DenseRange(0, 2);

void BM_fuzz_100(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)));
  const bohr::FunctionalParams params(2, 3, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bohr::fuzz_admissible(spec, params, bohr::Convention::exact_a1, 100, 42).size());
  }
}
BENCHMARK(BM_fuzz_100)->DenseRange(0, 2);

}  // namespace
BENCHMARK_MAIN();
