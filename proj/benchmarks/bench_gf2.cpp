#include <cstdint>
#include <random>

#include "benchmark/benchmark.h"
#include "orbitope/gf2.hpp"

namespace {

using namespace orbitope;

gf2::Matrix random_matrix(int rows, int cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(0.5);
    gf2::Matrix m(cols);
    for (int r = 0; r < rows; ++r) {
        gf2::Vector v(cols);
        for (int c = 0; c < cols; ++c)
            if (coin(rng)) v.set(c, true);
        m.add_row(v);
    }
    return m;
}

void bm_rank(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const auto m = random_matrix(size, size, 1729);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::rank(m));
}
BENCHMARK(bm_rank)->Arg(64)->Arg(256)->Arg(512);

void bm_kernel_basis(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const auto m = random_matrix(size / 2, size, 42);
    for (auto _ : state) {
        auto basis = gf2::kernel_basis(m);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(bm_kernel_basis)->Arg(64)->Arg(256)->Arg(512);

void bm_rowspace_intersection(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const auto a = random_matrix(size / 2, size, 7);
    const auto b = random_matrix(size / 2, size, 11);
    for (auto _ : state) {
        auto meet = gf2::intersect_rowspaces(a, b);
        benchmark::DoNotOptimize(meet);
    }
}
BENCHMARK(bm_rowspace_intersection)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
