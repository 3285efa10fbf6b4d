#ifndef ORBITOPE_CHAMBERS_HPP
#define ORBITOPE_CHAMBERS_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitope/polytopes.hpp"

// The wall arrangement on the hypersimplex and its full-dimensional
// chambers, enumerated by breadth-first sign flips with exact rational
// feasibility tests.

namespace orbitope::chambers {

struct Wall {
    enum class Kind { SumOne, CoordZero, CoordOne };
    Kind kind;
    sets::Mask support;  // sum walls: the deduplicated support; coord walls: one bit

    std::string label() const;
};

// Canonical order: sum walls by (size, digit string), then x_i = 0 walls,
// then x_i = 1 walls. Sum supports run over 2 <= |S| <= n/2 with one
// representative per complementary pair (the one containing 1).
std::vector<Wall> arrangement_walls(int n);

struct Chamber {
    std::string id;
    std::string signs;  // one char per wall, '+' or '-', canonical wall order
    poly::RationalPoint witness;
    int dim = 0;
    bool boundary_flag = false;
    std::vector<std::string> omega;  // sigma labels, sorted
};

struct ChamberSet {
    int n = 0;
    std::vector<Wall> walls;
    std::vector<Chamber> chambers;  // sorted by sign string

    int sum_wall_count() const;
    int index_of_signs(const std::string& signs) const;  // -1 when absent
    // Supports of the pair walls this chamber lies above (sum > 1).
    std::vector<sets::Mask> plus_pairs(const Chamber& c) const;
    // Sign of the sum wall with the given canonical support; 0 if no such wall.
    char sum_sign(const Chamber& c, sets::Mask support) const;
};

char sign_char(const mpq_class& value);
std::string sign_string(const poly::RationalPoint& x, const std::vector<Wall>& walls);

struct EnumerateOptions {
    int parallelism = 1;
    std::function<void(const std::string&)> progress;
};

// All chambers of maximal dimension strictly inside the hypersimplex, each
// with an exact interior witness and its omega set over the full-dimensional
// admissible polytopes. Deterministic: the result does not depend on
// parallelism.
ChamberSet enumerate_full_chambers(int n, const std::vector<poly::AdmissiblePolytope>& polys,
                                   const EnumerateOptions& options = {});

// Labels of the full-dimensional polytopes whose relative interior contains
// the witness. Throws if the witness lies on any wall.
std::vector<std::string> omega_of(const poly::RationalPoint& witness,
                                  const std::vector<Wall>& walls,
                                  const std::vector<poly::AdmissiblePolytope>& polys);

// True iff the sign vectors differ on exactly one wall.
bool adjacency(const Chamber& a, const Chamber& b);

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// JSON cache, schema orbitope/chambers/v1. Loading re-validates stored signs
// and omega sets on a deterministic sample of 100 witnesses and throws
// CacheError on any mismatch; a missing file yields nullopt.
void save_chambers(const ChamberSet& set, const std::string& path);
std::optional<ChamberSet> load_chambers(int n, const std::string& path,
                                        const std::vector<poly::AdmissiblePolytope>& polys);

}  // namespace orbitope::chambers

#endif  // ORBITOPE_CHAMBERS_HPP
