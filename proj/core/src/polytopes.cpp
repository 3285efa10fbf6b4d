#include "orbitope/polytopes.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbitope/rational_lp.hpp"

namespace orbitope::poly {

using sets::Mask;

std::string k_label(const std::vector<Mask>& supports) {
    std::string s = "K{";
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if (i > 0) s += '|';
        s += sets::digits(supports[i]);
    }
    s += '}';
    return s;
}

std::string slice_label(Mask support) { return "P{" + sets::digits(support) + "}"; }

mpq_class support_sum(Mask support, const RationalPoint& x) {
    mpq_class total = 0;
    for (int i : sets::elements(support)) total += x[i - 1];
    return total;
}

std::vector<RationalPoint> hypersimplex_vertices(int n) {
    if (n < 4) throw std::invalid_argument("hypersimplex machinery requires n >= 4");
    std::vector<RationalPoint> out;
    for (Mask pair : sets::subsets_of_size(n, 2)) {
        RationalPoint v(n, 0);
        for (int i : sets::elements(pair)) v[i - 1] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<AdmissiblePolytope> hypersimplex_facets(int n) {
    if (n < 4) throw std::invalid_argument("hypersimplex machinery requires n >= 4");
    std::vector<AdmissiblePolytope> out;
    for (int i = 1; i <= n; ++i) {
        AdmissiblePolytope o;
        o.sigma_label = "O{" + std::to_string(i) + "}";
        o.family = AdmissiblePolytope::Family::FacetO;
        o.supports = {sets::mask_of({i})};
        o.constraints = {{Constraint::Kind::CoordEQ0, sets::mask_of({i})}};
        o.dim = n - 2;
        out.push_back(std::move(o));
    }
    for (int i = 1; i <= n; ++i) {
        AdmissiblePolytope t;
        t.sigma_label = "T{" + std::to_string(i) + "}";
        t.family = AdmissiblePolytope::Family::FacetT;
        t.supports = {sets::mask_of({i})};
        t.constraints = {{Constraint::Kind::CoordEQ1, sets::mask_of({i})}};
        t.dim = n - 2;
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

bool vertex_satisfies(const AdmissiblePolytope& p, const RationalPoint& v) {
    for (const auto& c : p.constraints) {
        mpq_class s = support_sum(c.support, v);
        switch (c.kind) {
            case Constraint::Kind::SumLE1:
                if (s > 1) return false;
                break;
            case Constraint::Kind::SumEQ1:
                if (s != 1) return false;
                break;
            case Constraint::Kind::SumGE1:
                if (s < 1) return false;
                break;
            case Constraint::Kind::CoordEQ0:
                if (s != 0) return false;
                break;
            case Constraint::Kind::CoordEQ1:
                if (s != 1) return false;
                break;
        }
    }
    return true;
}

// Strict interior system for a halfspace family: the box plus every family
// constraint, all strict.
std::vector<lp::StrictInequality> family_interior_system(int n, const std::vector<Mask>& supports) {
    std::vector<lp::StrictInequality> sys;
    for (int i = 0; i < n; ++i) {
        lp::StrictInequality lower{std::vector<mpq_class>(n, 0), 0};
        lower.coeffs[i] = 1;  // x_i > 0
        sys.push_back(std::move(lower));
        lp::StrictInequality upper{std::vector<mpq_class>(n, 0), 1};
        upper.coeffs[i] = -1;  // 1 - x_i > 0
        sys.push_back(std::move(upper));
    }
    for (Mask s : supports) {
        lp::StrictInequality cut{std::vector<mpq_class>(n, 0), 1};
        for (int i : sets::elements(s)) cut.coeffs[i - 1] = -1;  // 1 - sum > 0
        sys.push_back(std::move(cut));
    }
    return sys;
}

int affine_rank(const std::vector<RationalPoint>& pts) {
    if (pts.empty()) return -1;
    std::vector<RationalPoint> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RationalPoint d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    // Gaussian elimination over the rationals.
    int rank = 0;
    std::size_t cols = pts[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(diffs.size()); ++c) {
        std::size_t pivot = diffs.size();
        for (std::size_t r = rank; r < diffs.size(); ++r)
            if (diffs[r][c] != 0) { pivot = r; break; }
        if (pivot == diffs.size()) continue;
        std::swap(diffs[rank], diffs[pivot]);
        for (std::size_t r = 0; r < diffs.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || diffs[r][c] == 0) continue;
            mpq_class f = diffs[r][c] / diffs[rank][c];
            for (std::size_t j = 0; j < cols; ++j) diffs[r][j] -= f * diffs[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Canonical slice representative: the smaller of S and its complement,
// breaking the n/2 tie toward the side containing 1.
Mask canonical_slice_support(Mask s, int n) {
    Mask c = sets::complement(s, n);
    int ss = sets::popcount(s), cs = sets::popcount(c);
    if (ss < cs) return s;
    if (cs < ss) return c;
    return sets::contains(s, 1) ? s : c;
}

void enumerate_families(int n, std::vector<Mask>& current, const std::vector<Mask>& pool,
                        std::size_t start, std::vector<std::vector<Mask>>& out) {
    if (!current.empty()) out.push_back(current);
    for (std::size_t i = start; i < pool.size(); ++i) {
        bool disjoint = true;
        for (Mask chosen : current)
            if ((chosen & pool[i]) != 0) { disjoint = false; break; }
        if (!disjoint) continue;
        current.push_back(pool[i]);
        enumerate_families(n, current, pool, i + 1, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<AdmissiblePolytope> enumerate_admissible_polytopes(int n) {
    if (n < 4) throw std::invalid_argument("hypersimplex machinery requires n >= 4");
    std::vector<AdmissiblePolytope> out;

    AdmissiblePolytope delta;
    delta.sigma_label = "Delta";
    delta.family = AdmissiblePolytope::Family::Delta;
    delta.dim = n - 1;
    out.push_back(std::move(delta));

    // Candidate supports in canonical order; families are built as sorted
    // pairwise-disjoint subsets of the pool.
    std::vector<Mask> pool;
    for (int k = 2; k <= n - 2; ++k)
        for (Mask s : sets::subsets_of_size(n, k)) pool.push_back(s);
    std::sort(pool.begin(), pool.end(),
              [](Mask a, Mask b) { return sets::digits(a) < sets::digits(b); });

    std::vector<std::vector<Mask>> families;
    std::vector<Mask> scratch;
    enumerate_families(n, scratch, pool, 0, families);

    for (auto& supports : families) {
        Mask covered = 0;
        for (Mask s : supports) covered |= s;
        // Two disjoint parts covering everything force both sums to equal
        // one; that polytope is the slice on either part, emitted below.
        if (supports.size() == 2 && covered == sets::full_mask(n)) continue;
        AdmissiblePolytope k;
        k.family = AdmissiblePolytope::Family::KFamily;
        k.supports = supports;
        k.sigma_label = k_label(supports);
        for (Mask s : supports) k.constraints.push_back({Constraint::Kind::SumLE1, s});
        k.dim = n - 1;
        out.push_back(std::move(k));
    }

    std::vector<Mask> slice_reps;
    for (int k = 2; k <= n / 2; ++k)
        for (Mask s : sets::subsets_of_size(n, k))
            if (canonical_slice_support(s, n) == s) slice_reps.push_back(s);
    for (Mask s : slice_reps) {
        AdmissiblePolytope p;
        p.family = AdmissiblePolytope::Family::Slice;
        p.supports = {s};
        p.sigma_label = slice_label(s);
        p.constraints = {{Constraint::Kind::SumEQ1, s}};
        p.dim = n - 2;
        out.push_back(std::move(p));
    }

    for (auto& f : hypersimplex_facets(n)) out.push_back(std::move(f));

    for (auto& p : out) {
        int computed = polytope_dim(p, n);
        if (computed != p.dim)
            throw std::logic_error("dimension mismatch for " + p.sigma_label);
    }

    std::sort(out.begin(), out.end(), [](const AdmissiblePolytope& a, const AdmissiblePolytope& b) {
        return a.sigma_label < b.sigma_label;
    });
    return out;
}

int polytope_dim(const AdmissiblePolytope& p, int n) {
    std::vector<RationalPoint> pts;
    for (const auto& v : hypersimplex_vertices(n))
        if (vertex_satisfies(p, v)) pts.push_back(v);
    if (p.family == AdmissiblePolytope::Family::Delta ||
        p.family == AdmissiblePolytope::Family::KFamily) {
        auto witness = lp::max_min_slack(n, family_interior_system(n, p.supports));
        if (witness.feasible) pts.push_back(witness.point);
    }
    if (pts.empty()) throw std::domain_error("empty polytope");
    return affine_rank(pts);
}

bool relative_interior_contains(const AdmissiblePolytope& p, const RationalPoint& x) {
    const int n = static_cast<int>(x.size());
    mpq_class total = 0;
    for (const auto& xi : x) total += xi;
    if (total != 2) throw std::invalid_argument("point is off the affine slice");

    Mask pinned = 0;
    for (const auto& c : p.constraints) {
        mpq_class s = support_sum(c.support, x);
        switch (c.kind) {
            case Constraint::Kind::SumLE1:
                if (!(s < 1)) return false;
                break;
            case Constraint::Kind::SumEQ1:
                if (s != 1) return false;
                break;
            case Constraint::Kind::SumGE1:
                if (!(s > 1)) return false;
                break;
            case Constraint::Kind::CoordEQ0:
                if (s != 0) return false;
                pinned |= c.support;
                break;
            case Constraint::Kind::CoordEQ1:
                if (s != 1) return false;
                pinned |= c.support;
                break;
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (sets::contains(pinned, i)) continue;
        const mpq_class& xi = x[i - 1];
        if (!(xi > 0 && xi < 1)) return false;
    }
    return true;
}

}  // namespace orbitope::poly
