#include "benchmark/benchmark.h"
#include "orbitope/chambers.hpp"
#include "orbitope/homology.hpp"
#include "orbitope/polytopes.hpp"

namespace {

using namespace orbitope;

const chambers::ChamberSet& chamber_set(int n) {
    static const chambers::ChamberSet set5 =
        chambers::enumerate_full_chambers(5, poly::enumerate_admissible_polytopes(5));
    static const chambers::ChamberSet set6 =
        chambers::enumerate_full_chambers(6, poly::enumerate_admissible_polytopes(6));
    return n == 5 ? set5 : set6;
}

void bm_keel_system(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto sys = homology::keel_system(n);
        benchmark::DoNotOptimize(sys.quotient_dim());
    }
}
BENCHMARK(bm_keel_system)->Arg(5)->Arg(6)->Arg(8);

void bm_betti_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& set = chamber_set(n);
    for (auto _ : state) {
        auto table = n == 5 ? homology::betti_X5(set) : homology::betti_X6(set);
        benchmark::DoNotOptimize(table.dims);
    }
}
BENCHMARK(bm_betti_table)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_betti_table)->Arg(6)->Unit(benchmark::kMillisecond)->Iterations(1);

void bm_chamber_relation_system(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& set = chamber_set(n);
    const int grade = n == 5 ? 2 : 4;
    for (auto _ : state) {
        for (const auto& c : set.chambers) {
            auto sys = homology::f_omega_system(set, c, grade);
            benchmark::DoNotOptimize(sys.quotient_dim());
        }
    }
}
BENCHMARK(bm_chamber_relation_system)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_chamber_relation_system)->Arg(6)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
