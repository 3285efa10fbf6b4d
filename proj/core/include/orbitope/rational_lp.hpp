#ifndef ORBITOPE_RATIONAL_LP_HPP
#define ORBITOPE_RATIONAL_LP_HPP

#include <gmpxx.h>

#include <vector>

// Exact feasibility of systems of strict linear inequalities on the affine
// slice x_1 + ... + x_n = 2, decided by maximizing the minimum slack with a
// rational primal simplex.

namespace orbitope::lp {

// The inequality coeffs . x + constant > 0 over ambient coordinates x_1..x_n.
struct StrictInequality {
    std::vector<mpq_class> coeffs;
    mpq_class constant;
};

struct SlackResult {
    bool feasible = false;     // true iff the best slack is strictly positive
    mpq_class slack;           // max over x of min_i (coeffs_i . x + constant_i)
    std::vector<mpq_class> point;  // n coordinates summing to 2, attains slack
};

// Maximizes t subject to every inequality holding with margin at least t,
// over points of the slice. Exact; deterministic (Bland pivoting). The box
// constraints 0 < x_i < 1 are NOT implicit; include them in `ineqs` if
// needed. The system must bound the slack from above (the box constraints
// do); an unbounded slack throws.
SlackResult max_min_slack(int n, const std::vector<StrictInequality>& ineqs);

}  // namespace orbitope::lp

#endif  // ORBITOPE_RATIONAL_LP_HPP
