#include "orbitope/param_spaces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace orbitope::spaces {

namespace {

using poly::AdmissiblePolytope;
using sets::Mask;

// Sorted part sizes of a K-family, e.g. {2,3} for K{12|345}.
std::vector<int> family_shape(const AdmissiblePolytope& p) {
    std::vector<int> shape;
    for (Mask s : p.supports) shape.push_back(sets::popcount(s));
    std::sort(shape.begin(), shape.end());
    return shape;
}

[[noreturn]] void unknown_polytope(const AdmissiblePolytope& p) {
    throw std::invalid_argument("no classification for " + p.sigma_label);
}

void require_classified_n(int n) {
    if (n != 5 && n != 6) throw std::invalid_argument("classification tables cover n in {5,6}");
}

Mask mask_from_digits(const std::string& digits) {
    Mask m = 0;
    for (char ch : digits) m |= Mask{1} << (ch - '1');
    return m;
}

// Supports sorted by digit string, the order the enumeration uses.
std::string canonical_k_label(std::vector<Mask> supports) {
    std::sort(supports.begin(), supports.end(),
              [](Mask a, Mask b) { return sets::digits(a) < sets::digits(b); });
    return poly::k_label(supports);
}

// Supports of a label in the omega grammar: the body has none, halfspace
// families list theirs between braces separated by bars.
std::vector<Mask> parse_label_supports(const std::string& label) {
    if (label == "Delta") return {};
    if (label.size() < 4 || label.compare(0, 2, "K{") != 0 || label.back() != '}')
        throw std::invalid_argument("not a family label: " + label);
    std::vector<Mask> supports;
    std::string digits;
    for (size_t i = 2; i + 1 <= label.size() - 1; ++i) {
        if (label[i] == '|') {
            supports.push_back(mask_from_digits(digits));
            digits.clear();
        } else {
            digits.push_back(label[i]);
        }
    }
    supports.push_back(mask_from_digits(digits));
    return supports;
}

struct SumSigns {
    int n = 0;
    std::vector<std::pair<Mask, bool>> pair_walls;    // (support, is_minus)
    std::vector<std::pair<Mask, bool>> halving_walls;  // support contains 1
};

SumSigns sum_signs_of(const chambers::ChamberSet& set, const chambers::Chamber& c) {
    SumSigns out;
    out.n = set.n;
    for (size_t w = 0; w < set.walls.size(); ++w) {
        if (set.walls[w].kind != chambers::Wall::Kind::SumOne) continue;
        bool minus = c.signs[w] == '-';
        if (sets::popcount(set.walls[w].support) == 2 && set.n != 4)
            out.pair_walls.emplace_back(set.walls[w].support, minus);
        else
            out.halving_walls.emplace_back(set.walls[w].support, minus);
    }
    return out;
}

}  // namespace

ParamClass param_class(const std::string& kind) {
    if (kind == "point") return {kind, 0};
    if (kind == "CP1A" || kind == "CP1") return {kind, 2};
    if (kind == "CP1xCP1A" || kind == "F5bar") return {kind, 4};
    if (kind.size() == 4 && kind.compare(0, 2, "F(") == 0 && kind.back() == ')') {
        int m = kind[2] - '0';
        if (m >= 5 && m <= 9) return {kind, 2 * (m - 3)};
    }
    throw std::invalid_argument("unknown space kind: " + kind);
}

ParamClass classify_space(const AdmissiblePolytope& p, int n) {
    require_classified_n(n);
    using Family = AdmissiblePolytope::Family;
    switch (p.family) {
        case Family::Delta:
            return param_class(n == 6 ? "F(6)" : "F(5)");
        case Family::FacetO:
            return param_class(n == 6 ? "F(5)" : "CP1A");
        case Family::FacetT:
        case Family::Slice:
            return param_class("point");
        case Family::KFamily:
            break;
    }
    const std::vector<int> shape = family_shape(p);
    if (shape == std::vector<int>{2}) return param_class(n == 6 ? "F(5)" : "CP1A");
    if (shape == std::vector<int>{3}) return param_class(n == 6 ? "CP1A" : "point");
    if (n == 6 && shape == std::vector<int>{4}) return param_class("point");
    if (shape == std::vector<int>{2, 2}) return param_class(n == 6 ? "CP1A" : "point");
    if (n == 6 && shape == std::vector<int>{2, 3}) return param_class("point");
    if (n == 6 && shape == std::vector<int>{2, 2, 2}) return param_class("point");
    unknown_polytope(p);
}

ParamClass classify_virtual(const AdmissiblePolytope& p, int n) {
    require_classified_n(n);
    using Family = AdmissiblePolytope::Family;
    switch (p.family) {
        case Family::Delta:
            return param_class(n == 6 ? "F(6)" : "F(5)");
        case Family::FacetO:
        case Family::FacetT:
        case Family::Slice:
            throw std::domain_error("virtual classification not tabulated for " + p.sigma_label);
        case Family::KFamily:
            break;
    }
    const std::vector<int> shape = family_shape(p);
    if (shape == std::vector<int>{2}) return param_class(n == 6 ? "F(5)" : "CP1A");
    if (shape == std::vector<int>{3}) return param_class(n == 6 ? "CP1xCP1A" : "CP1");
    if (n == 6 && shape == std::vector<int>{4}) return param_class("F5bar");
    if (shape == std::vector<int>{2, 2}) return param_class(n == 6 ? "CP1A" : "point");
    if (n == 6 && shape == std::vector<int>{2, 3}) return param_class("CP1");
    if (n == 6 && shape == std::vector<int>{2, 2, 2}) return param_class("point");
    unknown_polytope(p);
}

FOmegaPresentation assemble_F_omega(const chambers::Chamber& c, int n,
                                    const std::vector<AdmissiblePolytope>& polys) {
    std::map<std::string, const AdmissiblePolytope*> by_label;
    for (const auto& p : polys) by_label.emplace(p.sigma_label, &p);

    FOmegaPresentation out;
    out.chamber_id = c.id;
    int top_dim_count = 0;
    for (const std::string& label : c.omega) {
        auto it = by_label.find(label);
        if (it == by_label.end()) throw std::invalid_argument("omega label not enumerated: " + label);
        ParamClass cls = classify_space(*it->second, n);
        if (cls.real_dim == 2 * (n - 3)) ++top_dim_count;
        out.strata.emplace_back(label, std::move(cls));
    }
    if (top_dim_count != 1 || out.strata.empty() || out.strata.front().first != "Delta")
        throw std::logic_error("omega of " + c.id + " lacks a unique top stratum on the body");
    return out;
}

std::string Divisor::label() const { return "D{" + sets::digits(rep) + "}"; }

Divisor normalize_divisor(Mask side, int n) {
    const int size = sets::popcount(side);
    if (size < 2 || size > n - 2)
        throw std::invalid_argument("divisor side size out of range: " + sets::digits(side));
    Divisor d;
    d.rep = sets::contains(side, 1) ? side : sets::complement(side, n);
    d.size_class = std::min(size, n - size);
    return d;
}

std::vector<Divisor> normalized_divisors(int n) {
    std::set<Mask> seen;
    std::vector<Divisor> out;
    for (int size = 2; size <= n - 2; ++size) {
        for (Mask side : sets::subsets_of_size(n, size)) {
            Divisor d = normalize_divisor(side, n);
            if (seen.insert(d.rep).second) out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end(), [](const Divisor& a, const Divisor& b) {
        int sa = sets::popcount(a.rep), sb = sets::popcount(b.rep);
        if (sa != sb) return sa < sb;
        return sets::digits(a.rep) < sets::digits(b.rep);
    });
    return out;
}

namespace {

DictionaryRow single_image_row(int n, const std::string& printed, const std::string& image_set) {
    DictionaryRow row;
    row.printed_index = mask_from_digits(printed);
    row.divisor = normalize_divisor(row.printed_index, n);
    row.image = {canonical_k_label({mask_from_digits(image_set)})};
    return row;
}

DictionaryRow family_image_row(const std::string& printed, const std::string& family_set) {
    DictionaryRow row;
    row.printed_index = mask_from_digits(printed);
    row.divisor = normalize_divisor(row.printed_index, 6);
    const Mask family = mask_from_digits(family_set);
    row.image = {canonical_k_label({family})};
    for (Mask pair : sets::subsets_of_size(6, 2))
        if ((pair & family) == 0) row.image.push_back(canonical_k_label({family, pair}));
    return row;
}

}  // namespace

std::vector<DictionaryRow> divisor_dictionary(int n) {
    std::vector<DictionaryRow> rows;
    if (n == 5) {
        const std::pair<const char*, const char*> table[] = {
            {"12", "123"}, {"13", "235"}, {"14", "125"}, {"15", "135"}, {"23", "234"},
            {"24", "124"}, {"25", "134"}, {"123", "145"}, {"124", "345"}, {"125", "245"},
        };
        for (const auto& [printed, image] : table) rows.push_back(single_image_row(5, printed, image));
    } else if (n == 6) {
        const std::pair<const char*, const char*> pair_table[] = {
            {"12", "1236"}, {"13", "1235"}, {"14", "2356"}, {"15", "1256"}, {"16", "1356"},
            {"23", "1234"}, {"24", "2346"}, {"25", "1246"}, {"26", "1346"}, {"34", "2345"},
            {"35", "1245"}, {"36", "1345"}, {"1234", "1456"}, {"1235", "3456"}, {"1236", "2456"},
        };
        for (const auto& [printed, image] : pair_table)
            rows.push_back(single_image_row(6, printed, image));
        const std::pair<const char*, const char*> family_table[] = {
            {"123", "456"}, {"124", "145"}, {"125", "345"}, {"126", "245"}, {"134", "235"},
            {"135", "346"}, {"136", "246"}, {"234", "156"}, {"235", "356"}, {"236", "256"},
        };
        for (const auto& [printed, family] : family_table)
            rows.push_back(family_image_row(printed, family));
    } else {
        throw std::invalid_argument("divisor dictionary tables cover n in {5,6}");
    }
    std::sort(rows.begin(), rows.end(), [](const DictionaryRow& a, const DictionaryRow& b) {
        int sa = sets::popcount(a.divisor.rep), sb = sets::popcount(b.divisor.rep);
        if (sa != sb) return sa < sb;
        return sets::digits(a.divisor.rep) < sets::digits(b.divisor.rep);
    });
    return rows;
}

std::vector<DictionaryRow> corrupted_dictionary_fixture() {
    std::vector<DictionaryRow> rows = divisor_dictionary(6);
    const std::string good = canonical_k_label({mask_from_digits("346"), mask_from_digits("12")});
    const std::string bad = canonical_k_label({mask_from_digits("345"), mask_from_digits("12")});
    for (auto& row : rows) {
        if (row.printed_index != mask_from_digits("135")) continue;
        for (auto& label : row.image)
            if (label == good) label = bad;
    }
    return rows;
}

std::vector<int> pair_row_permutation(int n, const std::vector<DictionaryRow>& rows) {
    // Constraints: for every pair-class row, {perm(u), perm(v)} must equal the
    // complement of the image set, where {u, v} is the divisor's 2-element
    // side. The permutation count is at most 6! so exhaustive search is fine.
    std::vector<std::pair<Mask, Mask>> constraints;  // (pair side, required image pair)
    for (const auto& row : rows) {
        if (row.divisor.size_class != 2 || row.image.size() != 1) continue;
        const std::vector<Mask> supports = parse_label_supports(row.image.front());
        if (supports.size() != 1) continue;
        Mask side = sets::popcount(row.divisor.rep) == 2 ? row.divisor.rep
                                                         : sets::complement(row.divisor.rep, n);
        constraints.emplace_back(side, sets::complement(supports.front(), n));
    }

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<int> found;
    int matches = 0;
    do {
        bool ok = true;
        for (const auto& [side, target] : constraints) {
            if (sets::apply_permutation(side, perm) != target) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++matches;
            found = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (matches != 1) return {};
    return found;
}

PartitionReport verify_dictionary(int n, const std::vector<DictionaryRow>& rows) {
    PartitionReport report;
    auto fail = [&report](const std::string& message) {
        report.pass = false;
        report.messages.push_back(message);
    };

    const int single_size = n - 2;  // image sets of pair-class divisors
    std::set<Mask> single_images;
    std::set<Mask> family_sets;
    std::map<std::string, int> member_count;
    for (const auto& row : rows) {
        for (const auto& label : row.image) ++member_count[label];
        if (row.divisor.size_class == 2) {
            if (row.image.size() != 1) {
                fail("row " + row.divisor.label() + ": expected a single image label");
                continue;
            }
            const std::vector<Mask> supports = parse_label_supports(row.image.front());
            if (supports.size() != 1 || sets::popcount(supports.front()) != single_size) {
                fail("row " + row.divisor.label() + ": unexpected image " + row.image.front());
                continue;
            }
            if (!single_images.insert(supports.front()).second)
                fail("duplicated image " + row.image.front() + " at row " + row.divisor.label());
        } else {
            if (row.image.empty()) {
                fail("row " + row.divisor.label() + ": empty image");
                continue;
            }
            const Mask family = parse_label_supports(row.image.front()).front();
            if (!family_sets.insert(family).second)
                fail("duplicated family set " + sets::digits(family) + " at row " + row.divisor.label());
            std::set<Mask> expected;
            for (Mask pair : sets::subsets_of_size(n, 2))
                if ((pair & family) == 0) expected.insert(pair);
            std::set<std::string> expected_labels = {canonical_k_label({family})};
            for (Mask pair : expected) expected_labels.insert(canonical_k_label({family, pair}));
            for (const auto& label : row.image)
                if (!expected_labels.count(label))
                    fail("row " + row.divisor.label() + ": member " + label +
                         " is not over family set " + sets::digits(family));
            for (const auto& label : expected_labels)
                if (std::find(row.image.begin(), row.image.end(), label) == row.image.end())
                    fail("row " + row.divisor.label() + ": missing label " + label);
        }
    }
    for (const auto& [label, count] : member_count)
        if (count > 1) fail("duplicated label " + label);
    if (static_cast<size_t>(sets::subsets_of_size(n, single_size).size()) != single_images.size())
        fail("pair-class images do not cover all " + std::to_string(n - 2) + "-sets");
    return report;
}

std::vector<std::string> predicted_omega(const chambers::ChamberSet& set,
                                         const chambers::Chamber& c) {
    const int n = set.n;
    const SumSigns signs = sum_signs_of(set, c);
    std::vector<std::string> omega = {"Delta"};

    // One family per sum wall: the polytope on the chamber's low side.
    for (const auto& [support, minus] : signs.pair_walls)
        omega.push_back(canonical_k_label({minus ? support : sets::complement(support, n)}));
    for (const auto& [support, minus] : signs.halving_walls)
        omega.push_back(canonical_k_label({minus ? support : sets::complement(support, n)}));

    // Composite families need every part on its low side.
    std::vector<Mask> minus_pairs;
    for (const auto& [support, minus] : signs.pair_walls)
        if (minus) minus_pairs.push_back(support);
    for (size_t a = 0; a < minus_pairs.size(); ++a)
        for (size_t b = a + 1; b < minus_pairs.size(); ++b) {
            if ((minus_pairs[a] & minus_pairs[b]) != 0) continue;
            omega.push_back(canonical_k_label({minus_pairs[a], minus_pairs[b]}));
            for (size_t d = b + 1; d < minus_pairs.size(); ++d) {
                Mask either = minus_pairs[a] | minus_pairs[b];
                if ((minus_pairs[d] & either) == 0)
                    omega.push_back(canonical_k_label({minus_pairs[a], minus_pairs[b], minus_pairs[d]}));
            }
        }
    for (const auto& [support, minus] : signs.halving_walls) {
        const Mask low_side = minus ? support : sets::complement(support, n);
        for (Mask pair : minus_pairs)
            if ((pair & low_side) == 0) omega.push_back(canonical_k_label({low_side, pair}));
    }
    std::sort(omega.begin(), omega.end());
    return omega;
}

PartitionReport verify_partition(const chambers::ChamberSet& set, const chambers::Chamber& c) {
    PartitionReport report;
    auto fail = [&report](const std::string& message) {
        report.pass = false;
        report.messages.push_back(message);
    };

    const std::vector<std::string> predicted = predicted_omega(set, c);
    std::vector<std::string> actual = c.omega;
    std::sort(actual.begin(), actual.end());
    for (const auto& label : predicted)
        if (!std::binary_search(actual.begin(), actual.end(), label))
            fail(c.id + ": predicted member absent from omega: " + label);
    for (const auto& label : actual)
        if (!std::binary_search(predicted.begin(), predicted.end(), label))
            fail(c.id + ": omega member not predicted: " + label);

    if (set.n == 5) {
        // Expanding each complement-3-set member into its pair plus the
        // pair's matchings must tile the 26 base labels exactly once.
        std::map<std::string, int> cover;
        cover["Delta"] = 0;
        const std::vector<Mask> pairs = sets::subsets_of_size(5, 2);
        for (Mask p : pairs) cover[canonical_k_label({p})] = 0;
        for (size_t a = 0; a < pairs.size(); ++a)
            for (size_t b = a + 1; b < pairs.size(); ++b)
                if ((pairs[a] & pairs[b]) == 0) cover[canonical_k_label({pairs[a], pairs[b]})] = 0;

        auto bump = [&](const std::string& label) {
            auto it = cover.find(label);
            if (it == cover.end())
                fail(c.id + ": expansion produced a non-base label: " + label);
            else
                ++it->second;
        };
        for (const std::string& label : c.omega) {
            const std::vector<Mask> supports = parse_label_supports(label);
            if (supports.size() == 1 && sets::popcount(supports.front()) == 3) {
                const Mask pair = sets::complement(supports.front(), 5);
                bump(canonical_k_label({pair}));
                for (Mask other : pairs)
                    if ((other & pair) == 0) bump(canonical_k_label({pair, other}));
            } else {
                bump(label);
            }
        }
        for (const auto& [label, count] : cover) {
            if (count == 0) fail(c.id + ": base label never covered: " + label);
            if (count > 1) fail(c.id + ": base label covered " + std::to_string(count) + " times: " + label);
        }
    }
    return report;
}

}  // namespace orbitope::spaces
