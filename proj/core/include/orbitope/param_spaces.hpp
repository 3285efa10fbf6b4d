#ifndef ORBITOPE_PARAM_SPACES_HPP
#define ORBITOPE_PARAM_SPACES_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitope/chambers.hpp"
#include "orbitope/polytopes.hpp"

// Stratum-space classification tables for five and six labels, the divisor
// dictionaries mapping boundary divisors to virtual strata, and the partition
// checks that guard both the dictionaries and the per-chamber stratifications.

namespace orbitope::spaces {

struct ParamClass {
    std::string kind;  // F(5), F(6), CP1A, CP1, CP1xCP1A, F5bar, point
    int real_dim = 0;

    bool operator==(const ParamClass&) const = default;
};

// Builds the class for a kind string; real_dim(F(m)) = 2(m-3), the projective
// kinds have their fixed dimensions. Unknown kinds throw.
ParamClass param_class(const std::string& kind);

// Table-driven classification of the stratum space attached to an admissible
// polytope. F(4) is canonicalized to CP1A, so F(m) appears only for m >= 5.
// Only n in {5, 6} is classified; other n throw.
ParamClass classify_space(const poly::AdmissiblePolytope& p, int n);

// The virtual-stratum table. Defined for the body and the halfspace families;
// boundary facets and slices have no finite-product virtual type and throw.
ParamClass classify_virtual(const poly::AdmissiblePolytope& p, int n);

struct FOmegaPresentation {
    std::string chamber_id;
    // (sigma label, class) per omega member, in omega order.
    std::vector<std::pair<std::string, ParamClass>> strata;
};

// Classifies every stratum over a full-dimensional chamber. Exactly one
// stratum (the body) has real_dim 2(n-3); its absence is a logic error.
FOmegaPresentation assemble_F_omega(const chambers::Chamber& c, int n,
                                    const std::vector<poly::AdmissiblePolytope>& polys);

// A boundary divisor: the unordered pair {I, complement(I)} stored by the
// side containing label 1. size_class is the smaller side's size.
struct Divisor {
    sets::Mask rep = 0;
    int size_class = 0;

    std::string label() const;  // D{digits of rep}
    bool operator==(const Divisor&) const = default;
};

Divisor normalize_divisor(sets::Mask side, int n);

// All divisors with 2 <= |I| <= n-2, sorted by (|rep|, rep digits).
std::vector<Divisor> normalized_divisors(int n);

struct DictionaryRow {
    Divisor divisor;
    sets::Mask printed_index = 0;     // the index set the table lists the row under
    std::vector<std::string> image;   // sigma labels, family label first
};

// The verbatim divisor dictionaries: n=5 maps each divisor to one 3-set
// family; n=6 maps pair-class divisors to one 4-set family and 3-set-class
// divisors to one 3-set family plus the three pair+3-set families over the
// complement pairs. Rows sorted by divisor label.
std::vector<DictionaryRow> divisor_dictionary(int n);

// The n=6 dictionary with one member of the D{135} row replaced by a
// duplicate of a D{125} member; exercises the failure path of
// verify_dictionary, which must name the duplicated and the missing label.
std::vector<DictionaryRow> corrupted_dictionary_fixture();

// The unique permutation h with image(D_{uv}) supported on the complement of
// {h(u), h(v)} for every pair-class row, as a 1-based image table; empty when
// no single permutation fits. The same h maps each 3-set-class row's index
// set (or its complement) onto the row's family 3-set.
std::vector<int> pair_row_permutation(int n, const std::vector<DictionaryRow>& rows);

struct PartitionReport {
    bool pass = true;
    std::vector<std::string> messages;  // failures name the offending label
};

// Dictionary-level structure check: pair-class images biject onto the 4-sets
// (n=6) or 3-sets (n=5); each 3-set-class row pairs its family set with
// exactly the complement's pairs; no label appears in two rows.
PartitionReport verify_dictionary(int n, const std::vector<DictionaryRow>& rows);

// The omega set a full chamber must carry, rebuilt from its sum-wall signs
// alone: pair families flip to their complement sets above the wall, halving
// families flip to the complementary 3-set, and composite families require
// every part on its low side.
std::vector<std::string> predicted_omega(const chambers::ChamberSet& set,
                                         const chambers::Chamber& c);

// Per-chamber partition check. n=5: expanding each complement-3-set member
// into its pair plus the pair's matchings must tile the body, the 10 pair
// families and the 15 matching families exactly once. n=6: the chamber's
// omega must equal predicted_omega. Failures name the offending labels.
PartitionReport verify_partition(const chambers::ChamberSet& set, const chambers::Chamber& c);

}  // namespace orbitope::spaces

#endif  // ORBITOPE_PARAM_SPACES_HPP
