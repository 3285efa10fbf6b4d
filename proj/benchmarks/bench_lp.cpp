#include <vector>

#include "benchmark/benchmark.h"
#include "orbitope/rational_lp.hpp"

namespace {

using namespace orbitope;

// Box constraints 0 < x_i < 1 on the slice sum x = 2.
std::vector<lp::StrictInequality> box(int n) {
    std::vector<lp::StrictInequality> ineqs;
    for (int i = 0; i < n; ++i) {
        lp::StrictInequality lower;
        lower.coeffs.assign(n, 0);
        lower.coeffs[i] = 1;
        lower.constant = 0;
        ineqs.push_back(lower);
        lp::StrictInequality upper;
        upper.coeffs.assign(n, 0);
        upper.coeffs[i] = -1;
        upper.constant = 1;
        ineqs.push_back(upper);
    }
    return ineqs;
}

// Adds the strict side sum_{i in mask} x_i < 1 (side = -1) or > 1 (side = 1).
void add_sum_wall(std::vector<lp::StrictInequality>& ineqs, int n, unsigned mask, int side) {
    lp::StrictInequality ineq;
    ineq.coeffs.assign(n, 0);
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) ineq.coeffs[i] = side;
    ineq.constant = -side;
    ineqs.push_back(ineq);
}

void bm_feasible_chamber_query(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto ineqs = box(n);
    // One strict side per pair {1,i}: a generic feasibility query of the kind
    // the chamber enumeration issues per candidate sign vector.
    for (int i = 1; i < n; ++i) add_sum_wall(ineqs, n, 1u | (1u << i), i % 2 == 0 ? 1 : -1);
    for (auto _ : state) {
        auto result = lp::max_min_slack(n, ineqs);
        benchmark::DoNotOptimize(result.feasible);
    }
}
BENCHMARK(bm_feasible_chamber_query)->Arg(4)->Arg(5)->Arg(6);

void bm_infeasible_chamber_query(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto ineqs = box(n);
    // x_1 + x_2 > 1 together with both singleton-heavy sides below forces an
    // empty interior, so the slack maximum is non-positive.
    add_sum_wall(ineqs, n, 0b11u, 1);
    add_sum_wall(ineqs, n, 0b01u, -1);
    add_sum_wall(ineqs, n, 0b10u, -1);
    for (int i = 0; i < n; ++i) {
        lp::StrictInequality tight;
        tight.coeffs.assign(n, 0);
        tight.coeffs[i] = -1;
        tight.constant = mpq_class(1, 2);
        ineqs.push_back(tight);
    }
    for (auto _ : state) {
        auto result = lp::max_min_slack(n, ineqs);
        benchmark::DoNotOptimize(result.feasible);
    }
}
BENCHMARK(bm_infeasible_chamber_query)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
