#include "orbitope/chambers.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"

#include "orbitope/rational_lp.hpp"

namespace orbitope::chambers {

using sets::Mask;

std::string Wall::label() const {
    switch (kind) {
        case Kind::SumOne:
            return "S{" + sets::digits(support) + "}";
        case Kind::CoordZero:
            return "O{" + sets::digits(support) + "}";
        case Kind::CoordOne:
            return "T{" + sets::digits(support) + "}";
    }
    return {};
}

std::vector<Wall> arrangement_walls(int n) {
    if (n < 4) throw std::invalid_argument("hypersimplex machinery requires n >= 4");
    std::vector<Wall> walls;
    for (int k = 2; k <= n / 2; ++k) {
        for (Mask s : sets::subsets_of_size(n, k)) {
            if (2 * k == n && !sets::contains(s, 1)) continue;  // complement dedup
            walls.push_back({Wall::Kind::SumOne, s});
        }
    }
    for (int i = 1; i <= n; ++i) walls.push_back({Wall::Kind::CoordZero, sets::mask_of({i})});
    for (int i = 1; i <= n; ++i) walls.push_back({Wall::Kind::CoordOne, sets::mask_of({i})});
    return walls;
}

char sign_char(const mpq_class& value) {
    if (value > 0) return '+';
    if (value < 0) return '-';
    return '0';
}

namespace {

mpq_class wall_value(const Wall& w, const poly::RationalPoint& x) {
    switch (w.kind) {
        case Wall::Kind::SumOne:
            return poly::support_sum(w.support, x) - 1;
        case Wall::Kind::CoordZero:
            return poly::support_sum(w.support, x);
        case Wall::Kind::CoordOne:
            return poly::support_sum(w.support, x) - 1;
    }
    return 0;
}

}  // namespace

std::string sign_string(const poly::RationalPoint& x, const std::vector<Wall>& walls) {
    std::string s;
    s.reserve(walls.size());
    for (const auto& w : walls) s.push_back(sign_char(wall_value(w, x)));
    return s;
}

int ChamberSet::sum_wall_count() const {
    int count = 0;
    for (const auto& w : walls)
        if (w.kind == Wall::Kind::SumOne) ++count;
    return count;
}

int ChamberSet::index_of_signs(const std::string& signs) const {
    auto it = std::lower_bound(chambers.begin(), chambers.end(), signs,
                               [](const Chamber& c, const std::string& s) { return c.signs < s; });
    if (it != chambers.end() && it->signs == signs) return static_cast<int>(it - chambers.begin());
    return -1;
}

std::vector<Mask> ChamberSet::plus_pairs(const Chamber& c) const {
    std::vector<Mask> out;
    for (std::size_t i = 0; i < walls.size(); ++i)
        if (walls[i].kind == Wall::Kind::SumOne && sets::popcount(walls[i].support) == 2 &&
            c.signs[i] == '+')
            out.push_back(walls[i].support);
    return out;
}

char ChamberSet::sum_sign(const Chamber& c, Mask support) const {
    for (std::size_t i = 0; i < walls.size(); ++i)
        if (walls[i].kind == Wall::Kind::SumOne && walls[i].support == support) return c.signs[i];
    return 0;
}

bool adjacency(const Chamber& a, const Chamber& b) {
    if (a.signs.size() != b.signs.size()) return false;
    int diff = 0;
    for (std::size_t i = 0; i < a.signs.size(); ++i)
        if (a.signs[i] != b.signs[i] && ++diff > 1) return false;
    return diff == 1;
}

std::vector<std::string> omega_of(const poly::RationalPoint& witness,
                                  const std::vector<Wall>& walls,
                                  const std::vector<poly::AdmissiblePolytope>& polys) {
    const int n = static_cast<int>(witness.size());
    for (const auto& xi : witness)
        if (!(xi > 0 && xi < 1)) throw std::invalid_argument("not full-dimensional");
    for (const auto& w : walls)
        if (wall_value(w, witness) == 0) throw std::invalid_argument("not full-dimensional");
    std::vector<std::string> out;
    for (const auto& p : polys)
        if (p.dim == n - 1 && poly::relative_interior_contains(p, witness))
            out.push_back(p.sigma_label);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Deterministic interior point off every wall: coordinates 2/n plus scaled
// power-of-two perturbations summing to zero. The perturbation bound
// (2^{n-1}-1)/(64n) < 1/n keeps every non-halving sum wall unreached, and
// distinct power sums keep the halving walls unreached; valid for n <= 6.
poly::RationalPoint seed_point(int n) {
    poly::RationalPoint x(n);
    long accum = 0;
    for (int i = 0; i < n - 1; ++i) accum += 1L << i;
    for (int i = 0; i < n; ++i) {
        long w = (i + 1 < n) ? (1L << i) : -accum;
        mpq_class xi(2, n);
        xi.canonicalize();
        mpq_class delta(w, 64L * n);
        delta.canonicalize();
        x[i] = xi + delta;
    }
    return x;
}

struct SumWallView {
    std::vector<Mask> supports;
    int n;
};

// Necessary sign conditions: a set summing above one cannot contain a set
// summing below one, and two disjoint sets cannot both sum above one.
bool signs_possibly_feasible(const SumWallView& view, const std::string& s) {
    const int count = static_cast<int>(view.supports.size());
    const Mask full = sets::full_mask(view.n);
    // Atom list: (set, above-one?) for each wall and its complement.
    std::vector<std::pair<Mask, bool>> atoms;
    atoms.reserve(2 * count);
    for (int i = 0; i < count; ++i) {
        bool above = s[i] == '+';
        atoms.emplace_back(view.supports[i], above);
        atoms.emplace_back(full & ~view.supports[i], !above);
    }
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (std::size_t b = a + 1; b < atoms.size(); ++b) {
            if (a / 2 == b / 2) continue;  // same wall
            const auto& [xa, pa] = atoms[a];
            const auto& [xb, pb] = atoms[b];
            if (pa && pb && (xa & xb) == 0) return false;
            if (pa && !pb && (xa & ~xb) == 0) return false;
            if (pb && !pa && (xb & ~xa) == 0) return false;
        }
    }
    return true;
}

lp::SlackResult test_sum_signs(const SumWallView& view, const std::string& s) {
    const int n = view.n;
    std::vector<lp::StrictInequality> sys;
    for (int i = 0; i < n; ++i) {
        lp::StrictInequality lower{std::vector<mpq_class>(n, 0), 0};
        lower.coeffs[i] = 1;
        sys.push_back(std::move(lower));
        lp::StrictInequality upper{std::vector<mpq_class>(n, 0), 1};
        upper.coeffs[i] = -1;
        sys.push_back(std::move(upper));
    }
    for (std::size_t w = 0; w < view.supports.size(); ++w) {
        lp::StrictInequality q{std::vector<mpq_class>(n, 0), 0};
        if (s[w] == '+') {  // sum - 1 > 0
            for (int i : sets::elements(view.supports[w])) q.coeffs[i - 1] = 1;
            q.constant = -1;
        } else {  // 1 - sum > 0
            for (int i : sets::elements(view.supports[w])) q.coeffs[i - 1] = -1;
            q.constant = 1;
        }
        sys.push_back(std::move(q));
    }
    return lp::max_min_slack(n, sys);
}

// Runs fn(i) for i in [0, count) across `parallelism` threads; exceptions
// are re-thrown in the caller. fn must only touch its own index's state.
void parallel_for(int count, int parallelism, const std::function<void(int)>& fn) {
    if (parallelism <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    int num_threads = std::min(parallelism, count);
    for (int t = 0; t < num_threads; ++t) {
        threads.emplace_back([&, t]() {
            try {
                for (int i = t; i < count; i += num_threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

ChamberSet enumerate_full_chambers(int n, const std::vector<poly::AdmissiblePolytope>& polys,
                                   const EnumerateOptions& options) {
    if (n < 4 || n > 6) throw std::invalid_argument("chamber enumeration supports n in {4,5,6}");
    ChamberSet set;
    set.n = n;
    set.walls = arrangement_walls(n);

    SumWallView view{{}, n};
    for (const auto& w : set.walls)
        if (w.kind == Wall::Kind::SumOne) view.supports.push_back(w.support);
    const int sum_count = static_cast<int>(view.supports.size());

    poly::RationalPoint seed = seed_point(n);
    std::string seed_signs = sign_string(seed, set.walls).substr(0, sum_count);
    if (seed_signs.find('0') != std::string::npos)
        throw std::logic_error("seed point lies on a wall");

    std::map<std::string, poly::RationalPoint> found;
    std::set<std::string> infeasible;
    found.emplace(seed_signs, seed);
    std::vector<std::string> frontier = {seed_signs};
    int level = 0;

    while (!frontier.empty()) {
        std::vector<std::string> candidates;
        for (const auto& s : frontier) {
            for (int w = 0; w < sum_count; ++w) {
                std::string t = s;
                t[w] = t[w] == '+' ? '-' : '+';
                if (found.count(t) || infeasible.count(t)) continue;
                candidates.push_back(std::move(t));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<lp::SlackResult> results(candidates.size());
        std::vector<char> skipped(candidates.size(), 0);
        parallel_for(static_cast<int>(candidates.size()), options.parallelism, [&](int i) {
            if (!signs_possibly_feasible(view, candidates[i])) {
                skipped[i] = 1;
                return;
            }
            results[i] = test_sum_signs(view, candidates[i]);
        });

        std::vector<std::string> next;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!skipped[i] && results[i].feasible) {
                found.emplace(candidates[i], results[i].point);
                next.push_back(candidates[i]);
            } else {
                infeasible.insert(candidates[i]);
            }
        }
        if (options.progress) {
            options.progress("level " + std::to_string(level) + ": frontier " +
                             std::to_string(frontier.size()) + ", candidates " +
                             std::to_string(candidates.size()) + ", chambers " +
                             std::to_string(found.size()));
        }
        frontier = std::move(next);
        ++level;
    }

    const std::string coord_suffix = std::string(n, '+') + std::string(n, '-');
    for (auto& [sum_signs, witness] : found) {
        Chamber c;
        c.signs = sum_signs + coord_suffix;
        c.witness = witness;
        c.dim = n - 1;
        c.boundary_flag = false;
        set.chambers.push_back(std::move(c));
    }
    // The map iterates in sign order, so chambers are already canonical.
    for (std::size_t i = 0; i < set.chambers.size(); ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "c%04zu", i);
        set.chambers[i].id = buf;
    }

    parallel_for(static_cast<int>(set.chambers.size()), options.parallelism, [&](int i) {
        set.chambers[i].omega = omega_of(set.chambers[i].witness, set.walls, polys);
    });
    if (options.progress)
        options.progress("omega sets computed for " + std::to_string(set.chambers.size()) +
                         " chambers");
    return set;
}

namespace {

nlohmann::ordered_json wall_to_json(const Wall& w) {
    nlohmann::ordered_json j;
    switch (w.kind) {
        case Wall::Kind::SumOne:
            j["kind"] = "sum";
            j["support"] = sets::elements(w.support);
            break;
        case Wall::Kind::CoordZero:
            j["kind"] = "zero";
            j["index"] = sets::elements(w.support)[0];
            break;
        case Wall::Kind::CoordOne:
            j["kind"] = "one";
            j["index"] = sets::elements(w.support)[0];
            break;
    }
    return j;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

}  // namespace

void save_chambers(const ChamberSet& set, const std::string& path) {
    nlohmann::ordered_json j;
    j["schema"] = "orbitope/chambers/v1";
    j["n"] = set.n;
    j["walls"] = nlohmann::ordered_json::array();
    for (const auto& w : set.walls) j["walls"].push_back(wall_to_json(w));
    j["chambers"] = nlohmann::ordered_json::array();
    for (const auto& c : set.chambers) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["signs"] = c.signs;
        cj["witness"] = nlohmann::ordered_json::array();
        for (const auto& q : c.witness) cj["witness"].push_back(rational_to_string(q));
        cj["omega"] = c.omega;
        j["chambers"].push_back(std::move(cj));
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file: " + path);
    out << j.dump(2) << "\n";
}

std::optional<ChamberSet> load_chambers(int n, const std::string& path,
                                        const std::vector<poly::AdmissiblePolytope>& polys) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CacheError("cache file is not valid JSON: " + std::string(e.what()));
    }
    try {
        if (j.at("schema").get<std::string>() != "orbitope/chambers/v1")
            throw CacheError("cache schema mismatch");
        if (j.at("n").get<int>() != n) throw CacheError("cache holds a different n");

        ChamberSet set;
        set.n = n;
        set.walls = arrangement_walls(n);
        auto stored_walls = j.at("walls");
        if (stored_walls.size() != set.walls.size()) throw CacheError("wall list mismatch");
        for (std::size_t i = 0; i < set.walls.size(); ++i)
            if (stored_walls[i] != nlohmann::json(wall_to_json(set.walls[i])))
                throw CacheError("wall list mismatch");

        for (const auto& cj : j.at("chambers")) {
            Chamber c;
            c.id = cj.at("id").get<std::string>();
            c.signs = cj.at("signs").get<std::string>();
            if (c.signs.size() != set.walls.size()) throw CacheError("sign string length mismatch");
            for (const auto& q : cj.at("witness"))
                c.witness.push_back(rational_from_string(q.get<std::string>()));
            if (static_cast<int>(c.witness.size()) != n) throw CacheError("witness arity mismatch");
            c.omega = cj.at("omega").get<std::vector<std::string>>();
            c.dim = n - 1;
            c.boundary_flag = false;
            set.chambers.push_back(std::move(c));
        }
        for (std::size_t i = 1; i < set.chambers.size(); ++i)
            if (!(set.chambers[i - 1].signs < set.chambers[i].signs))
                throw CacheError("chambers out of canonical order");

        // Spot-check stored witnesses: signs and omega must reproduce.
        std::mt19937 rng(1729 + static_cast<unsigned>(n));
        std::vector<std::size_t> indices(set.chambers.size());
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
        std::shuffle(indices.begin(), indices.end(), rng);
        std::size_t sample = std::min<std::size_t>(100, indices.size());
        for (std::size_t k = 0; k < sample; ++k) {
            const Chamber& c = set.chambers[indices[k]];
            if (sign_string(c.witness, set.walls) != c.signs)
                throw CacheError("stored witness does not reproduce its sign vector");
            if (omega_of(c.witness, set.walls, polys) != c.omega)
                throw CacheError("stored omega set does not reproduce");
        }
        return set;
    } catch (const nlohmann::json::exception& e) {
        throw CacheError("cache file is malformed: " + std::string(e.what()));
    }
}

}  // namespace orbitope::chambers
