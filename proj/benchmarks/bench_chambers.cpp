#include "benchmark/benchmark.h"
#include "orbitope/chambers.hpp"
#include "orbitope/polytopes.hpp"

namespace {

using namespace orbitope;

void bm_enumerate_polytopes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto polys = poly::enumerate_admissible_polytopes(n);
        benchmark::DoNotOptimize(polys);
    }
}
BENCHMARK(bm_enumerate_polytopes)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_enumerate_chambers(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto polys = poly::enumerate_admissible_polytopes(n);
    for (auto _ : state) {
        auto set = chambers::enumerate_full_chambers(n, polys);
        benchmark::DoNotOptimize(set.chambers);
    }
}
// n = 6 takes seconds per iteration; a single iteration keeps the default
// benchmark run short while still reporting the scale.
BENCHMARK(bm_enumerate_chambers)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_enumerate_chambers)->Arg(6)->Unit(benchmark::kMillisecond)->Iterations(1);

void bm_omega_of_witness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto polys = poly::enumerate_admissible_polytopes(n);
    const auto set = chambers::enumerate_full_chambers(n, polys);
    const auto& witness = set.chambers.front().witness;
    for (auto _ : state) {
        auto omega = chambers::omega_of(witness, set.walls, polys);
        benchmark::DoNotOptimize(omega);
    }
}
BENCHMARK(bm_omega_of_witness)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
