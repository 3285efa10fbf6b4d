#ifndef ORBITOPE_POLYTOPES_HPP
#define ORBITOPE_POLYTOPES_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "orbitope/index_sets.hpp"

// The hypersimplex {x in [0,1]^n : sum x = 2} and its admissible polytopes:
// the body itself, cuts by families of sum <= 1 halfspaces over pairwise
// disjoint supports, hyperplane slices sum = 1, and the boundary facets.

namespace orbitope::poly {

using RationalPoint = std::vector<mpq_class>;

struct Constraint {
    enum class Kind { SumLE1, SumEQ1, SumGE1, CoordEQ0, CoordEQ1 };
    Kind kind;
    sets::Mask support;  // single-bit mask for the coordinate kinds
};

struct AdmissiblePolytope {
    enum class Family { Delta, KFamily, Slice, FacetO, FacetT };

    std::string sigma_label;  // doubles as the stable id
    Family family;
    std::vector<sets::Mask> supports;  // canonically sorted K-family supports,
                                       // or the single defining set / index
    std::vector<Constraint> constraints;
    int dim = -1;
};

// Canonical labels: Delta, K{12}, K{12|345}, P{12}, O{3}, T{3}. Family
// supports are sorted by their digit strings.
std::string k_label(const std::vector<sets::Mask>& supports);
std::string slice_label(sets::Mask support);

// The C(n,2) vertices with ones at positions i < j, lexicographic in (i, j).
std::vector<RationalPoint> hypersimplex_vertices(int n);

// n facets O_i (x_i = 0) and n facets T_i (x_i = 1), dimension n-2 each.
std::vector<AdmissiblePolytope> hypersimplex_facets(int n);

// The full admissible list, sorted by sigma_label: the body, every
// full-dimensional halfspace family, every slice (deduplicated under
// complementation; families forcing equalities are demoted to slices), and
// the boundary facets. Each entry carries its exact dimension.
std::vector<AdmissiblePolytope> enumerate_admissible_polytopes(int n);

// Affine dimension from the vertices satisfying the constraints plus an
// interior witness when one exists. Throws "empty polytope" if there are
// neither vertices nor witnesses.
int polytope_dim(const AdmissiblePolytope& p, int n);

// Exact relative-interior membership: equalities hold exactly, inequalities
// strictly, box coordinates strictly unless pinned by a coordinate equality.
// Requires sum x = 2.
bool relative_interior_contains(const AdmissiblePolytope& p, const RationalPoint& x);

mpq_class support_sum(sets::Mask support, const RationalPoint& x);

}  // namespace orbitope::poly

#endif  // ORBITOPE_POLYTOPES_HPP
