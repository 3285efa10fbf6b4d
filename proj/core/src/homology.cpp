#include "orbitope/homology.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "orbitope/param_spaces.hpp"
#include "orbitope/polytopes.hpp"

namespace orbitope::homology {

namespace {

using sets::Mask;

std::string pair_label(Mask pair) { return poly::k_label({pair}); }

std::string matching_label(Mask a, Mask b) {
    if (sets::digits(b) < sets::digits(a)) std::swap(a, b);
    return poly::k_label({a, b});
}

// The two relation pairings of a 4-subset {i<j<p<q}: each row couples the
// split (ij|pq) with one of the two crossing splits.
struct FourSubsetRows {
    std::array<std::pair<Mask, Mask>, 2> row1;  // (ij, pq), (ip, jq)
    std::array<std::pair<Mask, Mask>, 2> row2;  // (ij, pq), (iq, jp)
};

FourSubsetRows pairings_of(Mask four) {
    const std::vector<int> e = sets::elements(four);
    const Mask ij = sets::mask_of({e[0], e[1]}), pq = sets::mask_of({e[2], e[3]});
    const Mask ip = sets::mask_of({e[0], e[2]}), jq = sets::mask_of({e[1], e[3]});
    const Mask iq = sets::mask_of({e[0], e[3]}), jp = sets::mask_of({e[1], e[2]});
    FourSubsetRows out;
    out.row1 = {{{ij, pq}, {ip, jq}}};
    out.row2 = {{{ij, pq}, {iq, jp}}};
    return out;
}

std::set<Mask> plus_pair_set(const chambers::ChamberSet& set, const chambers::Chamber& c) {
    const auto plus = set.plus_pairs(c);
    return {plus.begin(), plus.end()};
}

void require_pair_grade(int n, int grade) {
    const bool ok = (n == 5 && grade == 2) || (n == 6 && grade == 4);
    if (!ok) throw std::invalid_argument("pair-class systems cover (5,2) and (6,4) only");
}

// Rows of the pair-class relation system in the coordinates of `pairs`.
// Pairs in `plus` or absent from the coordinate list contribute nothing.
gf2::Matrix pair_relation_rows(int n, const std::vector<Mask>& pairs,
                               const std::set<Mask>& plus) {
    std::map<Mask, int> index;
    for (size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);
    gf2::Matrix rows(static_cast<int>(pairs.size()));
    for (Mask four : sets::subsets_of_size(n, 4)) {
        const FourSubsetRows p = pairings_of(four);
        for (const auto& halves : {p.row1, p.row2}) {
            gf2::Vector row(static_cast<int>(pairs.size()));
            for (const auto& [a, b] : halves) {
                for (Mask half : {a, b}) {
                    const auto it = index.find(half);
                    if (it != index.end() && !plus.count(half)) row.flip(it->second);
                }
            }
            rows.add_row(std::move(row));
        }
    }
    return rows;
}

gf2::RelationSystem grade2_system_n6(const chambers::ChamberSet& set,
                                     const chambers::Chamber& c) {
    const std::set<Mask> plus = plus_pair_set(set, c);
    std::vector<Mask> minus_pairs;
    for (Mask pair : sets::subsets_of_size(6, 2))
        if (!plus.count(pair)) minus_pairs.push_back(pair);

    // 3-set family classes, one per halving wall, on the chamber's low side.
    std::vector<std::string> labels;
    for (const auto& wall : set.walls) {
        if (wall.kind != chambers::Wall::Kind::SumOne) continue;
        if (sets::popcount(wall.support) != 3) continue;
        const bool minus = set.sum_sign(c, wall.support) == '-';
        labels.push_back(pair_label(minus ? wall.support : sets::complement(wall.support, 6)));
    }
    for (size_t a = 0; a < minus_pairs.size(); ++a)
        for (size_t b = a + 1; b < minus_pairs.size(); ++b)
            if ((minus_pairs[a] & minus_pairs[b]) == 0)
                labels.push_back(matching_label(minus_pairs[a], minus_pairs[b]));

    gf2::RelationSystem sys(std::move(labels));
    // Per 4-subset, each pairing contributes one block per low-side pair:
    // the matchings of that pair with every disjoint low-side pair. Blocks
    // of a plus pair are absent. The 3-set classes stay untouched.
    for (Mask four : sets::subsets_of_size(6, 4)) {
        const FourSubsetRows p = pairings_of(four);
        for (const auto& halves : {p.row1, p.row2}) {
            std::vector<std::string> row;
            for (const auto& [a, b] : halves) {
                for (Mask half : {a, b}) {
                    if (plus.count(half)) continue;
                    for (Mask other : minus_pairs)
                        if ((other & half) == 0) row.push_back(matching_label(half, other));
                }
            }
            sys.add_relation(row);
        }
    }
    return sys;
}

void append_point_class_rows(gf2::RelationSystem& sys, int n) {
    for (Mask pair : sets::subsets_of_size(n, 2)) {
        const std::vector<int> e = sets::elements(pair);
        sys.add_relation({"g{" + std::to_string(e[0]) + "}", "g{" + std::to_string(e[1]) + "}"});
    }
}

std::vector<std::string> point_class_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("g{" + std::to_string(i) + "}");
    return labels;
}

void fill_degree_range(BettiTable& table) {
    for (int k = 0; k <= table.top_degree(); ++k) table.dims.emplace(k, 0);
}

}  // namespace

gf2::RelationSystem keel_system(int n) {
    if (n < 4) throw std::invalid_argument("divisor presentation needs n >= 4");
    std::vector<std::string> labels;
    for (const auto& d : spaces::normalized_divisors(n)) labels.push_back(d.label());
    gf2::RelationSystem sys(std::move(labels));

    // For each 4-subset, the sum of divisor classes separating {i,j} from
    // {p,q} equals the sum separating {i,p} from {j,q}, and likewise for the
    // third split. Supports run over every admissible divisor side.
    for (Mask four : sets::subsets_of_size(n, 4)) {
        const FourSubsetRows p = pairings_of(four);
        for (const auto& halves : {p.row1, p.row2}) {
            std::vector<std::string> row;
            for (const auto& [inside, outside] : halves) {
                for (int size = 2; size <= n - 2; ++size) {
                    for (Mask side : sets::subsets_of_size(n, size)) {
                        if ((side & inside) != inside) continue;
                        if ((side & outside) != 0) continue;
                        row.push_back(spaces::normalize_divisor(side, n).label());
                    }
                }
            }
            sys.add_relation(row);
        }
    }
    return sys;
}

gf2::RelationSystem f_omega_system(const chambers::ChamberSet& set,
                                   const chambers::Chamber& c, int grade) {
    if (set.n == 6 && grade == 2) return grade2_system_n6(set, c);
    require_pair_grade(set.n, grade);
    const std::set<Mask> plus = plus_pair_set(set, c);
    std::vector<std::string> labels;
    std::vector<Mask> minus_pairs;
    for (Mask pair : sets::subsets_of_size(set.n, 2)) {
        if (plus.count(pair)) continue;
        minus_pairs.push_back(pair);
        labels.push_back(pair_label(pair));
    }
    gf2::RelationSystem sys(std::move(labels));
    const gf2::Matrix rows = pair_relation_rows(set.n, minus_pairs, {});
    // pair_relation_rows was built on the minus pairs only, so the plus-pair
    // coordinates are already gone.
    for (const auto& row : rows.rows()) sys.add_relation_row(row);
    return sys;
}

gf2::Vector project_cycle(const gf2::Vector& z, const std::vector<std::string>& z_labels,
                          const gf2::RelationSystem& target) {
    if (z.size() != static_cast<int>(z_labels.size()))
        throw std::invalid_argument("cycle length does not match its label list");
    gf2::Vector out(target.generator_count());
    for (int i = 0; i < z.size(); ++i) {
        if (!z.get(i)) continue;
        const int idx = target.index_of(z_labels[i]);
        if (idx >= 0) out.flip(idx);
    }
    return out;
}

CycleSpace cycle_space_3n9(int n) {
    if (n < 4) throw std::invalid_argument("cycle space needs n >= 4");
    CycleSpace out;
    const std::vector<Mask> pairs = sets::subsets_of_size(n, 2);
    std::map<Mask, int> index;
    for (size_t i = 0; i < pairs.size(); ++i) {
        index[pairs[i]] = static_cast<int>(i);
        out.labels.push_back(pair_label(pairs[i]));
    }
    out.basis = gf2::Matrix(static_cast<int>(pairs.size()));
    for (int m = 1; m < n; ++m) {
        for (int i = m + 1; i < n; ++i) {
            gf2::Vector row(static_cast<int>(pairs.size()));
            row.flip(index.at(sets::mask_of({m, i})));
            row.flip(index.at(sets::mask_of({m, n})));
            row.flip(index.at(sets::mask_of({i, n})));
            out.basis.add_row(std::move(row));
        }
    }
    return out;
}

gf2::Matrix null_cycles(const chambers::ChamberSet& set, int grade) {
    require_pair_grade(set.n, grade);
    const std::vector<Mask> pairs = sets::subsets_of_size(set.n, 2);
    std::map<Mask, int> index;
    for (size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);

    gf2::Matrix current = cycle_space_3n9(set.n).basis;
    std::set<std::set<Mask>> seen;
    for (const auto& c : set.chambers) {
        const std::set<Mask> plus = plus_pair_set(set, c);
        if (!seen.insert(plus).second) continue;
        // A cycle dies in this chamber's quotient iff it lies in the span of
        // the relation rows together with the dropped plus-pair axes.
        gf2::Matrix allowed = pair_relation_rows(set.n, pairs, plus);
        for (Mask p : plus) {
            gf2::Vector unit(static_cast<int>(pairs.size()));
            unit.flip(index.at(p));
            allowed.add_row(std::move(unit));
        }
        current = gf2::intersect_rowspaces(current, allowed);
        if (current.row_count() == 0) break;
    }
    return current;
}

BettiTable betti_X5(const chambers::ChamberSet& set, const std::string& mode) {
    if (set.n != 5) throw std::invalid_argument("expected the rank-5 chamber set");
    if (mode != "paper" && mode != "exhaustive")
        throw std::invalid_argument("unknown mode: " + mode);
    BettiTable table;
    table.n = 5;
    table.mode = mode;
    fill_degree_range(table);
    table.dims[0] = 1;
    table.dims[table.top_degree()] = 1;

    gf2::RelationSystem points(point_class_labels(5));
    append_point_class_rows(points, 5);
    table.dims[5] = points.quotient_dim();
    table.diagnostics.push_back("x5/h5: 5 point classes, incidence rank " +
                                std::to_string(points.rank()));

    const CycleSpace cycles = cycle_space_3n9(5);
    const gf2::Matrix null_basis = null_cycles(set, 2);
    table.dims[6] = cycles.basis.row_count() - null_basis.row_count();
    table.diagnostics.push_back("x5/h6: cycle dimension " +
                                std::to_string(cycles.basis.row_count()) +
                                ", chamber-null dimension " +
                                std::to_string(null_basis.row_count()));
    table.diagnostics.push_back("x5: relation bases coincide in both modes");
    return table;
}

BettiTable betti_X6(const chambers::ChamberSet& set, const std::string& mode) {
    if (set.n != 6) throw std::invalid_argument("expected the rank-6 chamber set");
    if (mode != "paper" && mode != "exhaustive")
        throw std::invalid_argument("unknown mode: " + mode);
    BettiTable table;
    table.n = 6;
    table.mode = mode;
    fill_degree_range(table);
    table.dims[0] = 1;
    table.dims[table.top_degree()] = 1;

    // Degree 5: the corner classes indexed by ordered pairs collapse to a
    // single class because both orders bound the same chain.
    table.dims[5] = 1;
    table.diagnostics.push_back("x6/h5: single class after corner identification");

    gf2::RelationSystem points(point_class_labels(6));
    append_point_class_rows(points, 6);
    table.dims[8] = points.quotient_dim();
    table.diagnostics.push_back("x6/h8: 6 point classes, incidence rank " +
                                std::to_string(points.rank()));

    const CycleSpace cycles = cycle_space_3n9(6);
    const gf2::Matrix null_basis = null_cycles(set, 4);
    table.dims[9] = cycles.basis.row_count() - null_basis.row_count();
    table.diagnostics.push_back("x6/h9: cycle dimension " +
                                std::to_string(cycles.basis.row_count()) +
                                ", chamber-null dimension " +
                                std::to_string(null_basis.row_count()));

    // Degree 7: one generator per 4-subset; the boundary of the degree-8
    // chain attached to ground-set point s sums the five generators missing
    // s, and differences of those sums are the relations.
    std::vector<std::string> mid_labels;
    for (Mask four : sets::subsets_of_size(6, 4)) mid_labels.push_back("g{" + sets::digits(four) + "}");
    gf2::RelationSystem mid(mid_labels);
    for (Mask pair : sets::subsets_of_size(6, 2)) {
        const std::vector<int> e = sets::elements(pair);
        std::vector<std::string> row;
        for (Mask four : sets::subsets_of_size(6, 4)) {
            if (!sets::contains(four, e[0])) row.push_back("g{" + sets::digits(four) + "}");
            if (!sets::contains(four, e[1])) row.push_back("g{" + sets::digits(four) + "}");
        }
        mid.add_relation(row);
    }
    table.dims[7] = mid.quotient_dim();
    table.diagnostics.push_back("x6/h7: 15 generators, boundary rows rank " +
                                std::to_string(mid.rank()));

    // Degree 6: six point-indexed generators. The designated relation rows
    // are the three 4-subset sums through {1,2,3}; the exhaustive variant
    // uses every 4-subset sum.
    gf2::RelationSystem designated(point_class_labels(6));
    gf2::RelationSystem exhaustive(point_class_labels(6));
    for (Mask four : sets::subsets_of_size(6, 4)) {
        std::vector<std::string> row;
        for (int i : sets::elements(four)) row.push_back("g{" + std::to_string(i) + "}");
        if ((four & sets::mask_of({1, 2, 3})) == sets::mask_of({1, 2, 3}))
            designated.add_relation(row);
        exhaustive.add_relation(row);
    }
    table.dims[6] = mode == "exhaustive" ? exhaustive.quotient_dim() : designated.quotient_dim();
    table.diagnostics.push_back(
        "x6/h6: designated rows rank " + std::to_string(designated.rank()) + " give dimension " +
        std::to_string(designated.quotient_dim()) + "; all 4-subset rows rank " +
        std::to_string(exhaustive.rank()) + " give dimension " +
        std::to_string(exhaustive.quotient_dim()));
    return table;
}

std::vector<StructuralCheck> structural_checks(const BettiTable& table) {
    std::vector<StructuralCheck> checks;
    const int top = table.top_degree();
    auto dim = [&table](int k) {
        auto it = table.dims.find(k);
        return it == table.dims.end() ? 0 : it->second;
    };
    checks.push_back({"top-degree-class", dim(top) == 1,
                      "degree " + std::to_string(top) + " has dimension " +
                          std::to_string(dim(top)) + ", expected 1"});
    checks.push_back({"below-top-vanishes", dim(top - 1) == 0,
                      "degree " + std::to_string(top - 1) + " has dimension " +
                          std::to_string(dim(top - 1)) + ", expected 0"});
    checks.push_back({"connected", dim(0) == 1,
                      "degree 0 has dimension " + std::to_string(dim(0)) + ", expected 1"});
    bool low_ok = true;
    for (int k = 1; k <= table.n - 3; ++k)
        if (dim(k) != 0) low_ok = false;
    checks.push_back({"low-degrees-vanish", low_ok,
                      "degrees 1.." + std::to_string(table.n - 3) + " must vanish"});
    return checks;
}

std::string permuted_signs(const chambers::ChamberSet& set, const chambers::Chamber& c,
                           const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != set.n)
        throw std::invalid_argument("permutation length must equal n");
    std::map<std::pair<int, Mask>, int> wall_index;
    for (size_t w = 0; w < set.walls.size(); ++w)
        wall_index[{static_cast<int>(set.walls[w].kind), set.walls[w].support}] =
            static_cast<int>(w);

    std::string out(set.walls.size(), '?');
    for (size_t w = 0; w < set.walls.size(); ++w) {
        const auto& wall = set.walls[w];
        Mask image = sets::apply_permutation(wall.support, perm);
        bool flip = false;
        if (wall.kind == chambers::Wall::Kind::SumOne &&
            2 * sets::popcount(wall.support) == set.n && !sets::contains(image, 1)) {
            // The canonical representative of a halving support contains 1;
            // switching to the complement negates the defining form on the
            // ambient slice.
            image = sets::complement(image, set.n);
            flip = true;
        }
        const auto it = wall_index.find({static_cast<int>(wall.kind), image});
        if (it == wall_index.end()) throw std::logic_error("permuted wall not found");
        const char sign = c.signs[w];
        out[it->second] = flip ? (sign == '+' ? '-' : '+') : sign;
    }
    return out;
}

}  // namespace orbitope::homology
