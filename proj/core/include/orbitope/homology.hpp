#ifndef ORBITOPE_HOMOLOGY_HPP
#define ORBITOPE_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "orbitope/chambers.hpp"
#include "orbitope/gf2.hpp"

// Mod-2 homology of the orbit spaces assembled from the chamber structure.
// The orbit space of rank n has dimension 3n-7; the interesting degrees sit
// between n-2 and 3n-9 and are derived from exact relation systems.

namespace orbitope::homology {

// Divisor class presentation: one generator per normalized divisor, two
// relation rows per 4-element subset of the ground set. Valid for n >= 4.
gf2::RelationSystem keel_system(int n);

// Relation system of the grade-`grade` classes supported on one chamber's
// polytope collection. Valid (n, grade) pairs: (5,2), (6,4), (6,2).
// For grade matching 2(n-4)+2 the generators are the low-side pair families;
// for (6,2) they are the ten 3-set family classes, which no relation touches,
// together with the low-side matching families.
gf2::RelationSystem f_omega_system(const chambers::ChamberSet& set,
                                   const chambers::Chamber& c, int grade);

// Restates z over the target system's generators; labels the target lacks
// are dropped.
gf2::Vector project_cycle(const gf2::Vector& z, const std::vector<std::string>& z_labels,
                          const gf2::RelationSystem& target);

// Cycle space of the complete graph on n labeled points, spanned by the
// triangles through point n; dimension (n-1)(n-2)/2. Coordinates follow
// `labels`, the pair families in digit order.
struct CycleSpace {
    std::vector<std::string> labels;
    gf2::Matrix basis;
};
CycleSpace cycle_space_3n9(int n);

// Basis of the cycles that die in the grade quotient of every chamber, in
// the coordinates of cycle_space_3n9(set.n). Valid (n, grade) pairs: (5,2)
// and (6,4).
gf2::Matrix null_cycles(const chambers::ChamberSet& set, int grade);

struct BettiTable {
    int n = 0;
    std::string mode;        // relation basis choice, "paper" or "exhaustive"
    std::map<int, int> dims;  // every degree 0..3n-7, zeros included
    std::vector<std::string> diagnostics;

    int top_degree() const { return 3 * n - 7; }
};

BettiTable betti_X5(const chambers::ChamberSet& set, const std::string& mode = "paper");
BettiTable betti_X6(const chambers::ChamberSet& set, const std::string& mode = "paper");

struct StructuralCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Degree constraints every orbit space table must satisfy: a single class on
// top, nothing right below it, connectivity, and vanishing through n-3.
std::vector<StructuralCheck> structural_checks(const BettiTable& table);

// Sign string of the chamber's image under a permutation of the ground set
// (perm is 1-based: perm[i-1] is the image of i). Halving-wall signs flip
// when the image support lands on the non-canonical side.
std::string permuted_signs(const chambers::ChamberSet& set, const chambers::Chamber& c,
                           const std::vector<int>& perm);

}  // namespace orbitope::homology

#endif  // ORBITOPE_HOMOLOGY_HPP
