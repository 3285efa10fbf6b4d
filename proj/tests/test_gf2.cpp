#include "orbitope/gf2.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using orbitope::gf2::Matrix;
using orbitope::gf2::RelationSystem;
using orbitope::gf2::Vector;

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
    Matrix m(cols);
    std::bernoulli_distribution bit(0.5);
    for (int r = 0; r < rows; ++r) {
        Vector v(cols);
        for (int c = 0; c < cols; ++c)
            if (bit(rng)) v.set(c, true);
        m.add_row(std::move(v));
    }
    return m;
}

std::vector<std::vector<int>> to_int_rows(const Matrix& m) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < m.row_count(); ++r) {
        std::vector<int> row(m.cols());
        for (int c = 0; c < m.cols(); ++c) row[c] = m.row(r).get(c) ? 1 : 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

TEST(Gf2Vector, BasicOperations) {
    Vector v(70);
    EXPECT_TRUE(v.is_zero());
    EXPECT_EQ(v.leading_bit(), -1);
    v.set(3, true);
    v.set(69, true);
    EXPECT_FALSE(v.is_zero());
    EXPECT_EQ(v.weight(), 2);
    EXPECT_EQ(v.leading_bit(), 3);
    v.flip(3);
    EXPECT_EQ(v.leading_bit(), 69);
    v.flip(3);

    Vector w(70);
    w.set(3, true);
    Vector sum = v ^ w;
    EXPECT_FALSE(sum.get(3));
    EXPECT_TRUE(sum.get(69));
    EXPECT_EQ((v ^ v).weight(), 0);

    // dot is the parity of the overlap.
    EXPECT_TRUE(v.dot(w));
    Vector u(70);
    u.set(3, true);
    u.set(69, true);
    EXPECT_FALSE(v.dot(u));
    EXPECT_EQ(Vector(5).to_string(), "00000");
}

TEST(Gf2Vector, AdditionIsCommutativeAssociativeInvolutive) {
    std::mt19937 rng(7);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 50; ++trial) {
        Vector a(97), b(97), c(97);
        for (int i = 0; i < 97; ++i) {
            if (bit(rng)) a.set(i, true);
            if (bit(rng)) b.set(i, true);
            if (bit(rng)) c.set(i, true);
        }
        EXPECT_EQ(a ^ b, b ^ a);
        EXPECT_EQ((a ^ b) ^ c, a ^ (b ^ c));
        EXPECT_EQ(a ^ b ^ b, a);
        EXPECT_EQ((a ^ b).weight() % 2, (a.weight() + b.weight()) % 2);
    }
}

TEST(Gf2Rank, MatchesNaiveOracleOnRandomMatrices) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> rows_dist(1, 12), cols_dist(1, 16);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix m = random_matrix(rng, rows_dist(rng), cols_dist(rng));
        EXPECT_EQ(orbitope::gf2::rank(m), oracle::naive_rank(to_int_rows(m)));
    }
}

TEST(Gf2Rank, InvariantUnderRowAndColumnPermutation) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(rng, 10, 12);
        std::vector<int> row_perm(10), col_perm(12);
        for (int i = 0; i < 10; ++i) row_perm[i] = i;
        for (int i = 0; i < 12; ++i) col_perm[i] = i;
        std::shuffle(row_perm.begin(), row_perm.end(), rng);
        std::shuffle(col_perm.begin(), col_perm.end(), rng);
        Matrix p(12);
        for (int r = 0; r < 10; ++r) {
            Vector v(12);
            for (int c = 0; c < 12; ++c) v.set(col_perm[c], m.row(row_perm[r]).get(c));
            p.add_row(std::move(v));
        }
        EXPECT_EQ(orbitope::gf2::rank(m), orbitope::gf2::rank(p));
    }
}

TEST(Gf2Kernel, RankPlusNullityAndExactness) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = random_matrix(rng, 8, 11);
        auto kernel = orbitope::gf2::kernel_basis(m);
        EXPECT_EQ(orbitope::gf2::rank(m) + static_cast<int>(kernel.size()), m.cols());
        // Every kernel vector maps to zero.
        for (const auto& v : kernel) EXPECT_TRUE(m.apply(v).is_zero());
        // The kernel basis is independent.
        Matrix kb(m.cols());
        for (const auto& v : kernel) kb.add_row(v);
        EXPECT_EQ(orbitope::gf2::rank(kb), static_cast<int>(kernel.size()));
    }
}

TEST(Gf2Kernel, CanonicalAcrossRowShuffles) {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(rng, 9, 13);
        std::vector<int> perm(m.row_count());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix shuffled(m.cols());
        for (int r : perm) shuffled.add_row(m.row(r));
        EXPECT_EQ(orbitope::gf2::kernel_basis(m), orbitope::gf2::kernel_basis(shuffled));
        // rref is canonical for the row space as well.
        auto a = orbitope::gf2::rref(m), b = orbitope::gf2::rref(shuffled);
        EXPECT_EQ(a.rows(), b.rows());
    }
}

TEST(Gf2Rowspace, MembershipSumIntersection) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a = random_matrix(rng, 5, 12);
        Matrix b = random_matrix(rng, 5, 12);
        // Any sum of rows of a is in the row space of a.
        Vector combo(12);
        std::bernoulli_distribution bit(0.5);
        for (int r = 0; r < a.row_count(); ++r)
            if (bit(rng)) combo ^= a.row(r);
        EXPECT_TRUE(orbitope::gf2::in_rowspace(a, combo));

        Matrix sum = orbitope::gf2::sum_rowspaces(a, b);
        Matrix meet = orbitope::gf2::intersect_rowspaces(a, b);
        int ra = orbitope::gf2::rank(a), rb = orbitope::gf2::rank(b);
        int rs = orbitope::gf2::rank(sum), rm = orbitope::gf2::rank(meet);
        EXPECT_EQ(rs + rm, ra + rb);  // modular law for dimensions
        for (const auto& v : meet.rows()) {
            EXPECT_TRUE(orbitope::gf2::in_rowspace(a, v));
            EXPECT_TRUE(orbitope::gf2::in_rowspace(b, v));
        }
        for (const auto& v : a.rows()) EXPECT_TRUE(orbitope::gf2::in_rowspace(sum, v));
        for (const auto& v : b.rows()) EXPECT_TRUE(orbitope::gf2::in_rowspace(sum, v));
    }
}

TEST(Gf2Rowspace, IntersectionOfEqualSpacesIsTheSpace) {
    std::mt19937 rng(29);
    Matrix a = random_matrix(rng, 6, 10);
    Matrix b(10);
    // Same span, different generating rows.
    for (int r = 0; r < a.row_count(); ++r) {
        Vector v = a.row(r);
        if (r + 1 < a.row_count()) v ^= a.row(r + 1);
        b.add_row(std::move(v));
    }
    b.add_row(a.row(a.row_count() - 1));
    Matrix meet = orbitope::gf2::intersect_rowspaces(a, b);
    EXPECT_EQ(orbitope::gf2::rank(meet), orbitope::gf2::rank(a));
}

// Edge-vertex incidence of the complete graph on five labels: rank is four,
// kernel is the cycle space of dimension six.
TEST(Gf2Graph, CompleteGraphIncidence) {
    const int n = 5;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    Matrix incidence(static_cast<int>(edges.size()));
    for (int v = 0; v < n; ++v) {
        std::vector<int> support;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first == v || edges[e].second == v) support.push_back(static_cast<int>(e));
        incidence.add_row_from_support(support);
    }
    EXPECT_EQ(orbitope::gf2::rank(incidence), n - 1);
    auto cycles = orbitope::gf2::kernel_basis(incidence);
    EXPECT_EQ(static_cast<int>(cycles.size()), oracle::cycle_space_dim(n));
    for (const auto& c : cycles) {
        EXPECT_FALSE(c.is_zero());
        EXPECT_GE(c.weight(), 3) << "shortest cycle in a complete graph is a triangle";
        EXPECT_TRUE(incidence.apply(c).is_zero()) << "even degree at every vertex";
    }
}

// The fifteen weight-four rows on six coordinates (complement-pair
// indicators) span a five-dimensional space: each is a sum of two of the
// complementary-pair rows through a fixed position.
TEST(Gf2Span, WeightFourRowsOnSixCoordinates) {
    std::vector<int> coords = {0, 1, 2, 3, 4, 5};
    Matrix m(6);
    int count = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            std::vector<int> support;
            for (int c : coords)
                if (c != a && c != b) support.push_back(c);
            m.add_row_from_support(support);
            ++count;
        }
    EXPECT_EQ(count, 15);
    EXPECT_EQ(orbitope::gf2::rank(m), 5);
}

TEST(Gf2Relations, LabelAccountingAndQuotients) {
    RelationSystem sys({"g1", "g2", "g3", "g4"});
    EXPECT_EQ(sys.generator_count(), 4);
    EXPECT_EQ(sys.index_of("g3"), 2);
    EXPECT_EQ(sys.index_of("nope"), -1);
    EXPECT_EQ(sys.quotient_dim(), 4);

    sys.add_relation({"g1", "g2"});
    EXPECT_EQ(sys.quotient_dim(), 3);
    // Repeated labels cancel in pairs: this row is g2 + g3.
    sys.add_relation({"g2", "g3", "g1", "g1"});
    EXPECT_EQ(sys.quotient_dim(), 2);
    // Dependent relation changes nothing.
    sys.add_relation({"g1", "g3"});
    EXPECT_EQ(sys.rank(), 2);
    EXPECT_EQ(sys.quotient_dim(), 2);

    EXPECT_THROW(sys.add_relation({"g1", "bogus"}), std::invalid_argument);
    EXPECT_THROW(RelationSystem({"a", "a"}), std::invalid_argument);
}

TEST(Gf2Relations, QuotientMonotoneUnderAddedRelations) {
    std::mt19937 rng(31);
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back("e" + std::to_string(i));
    RelationSystem sys(labels);
    int prev = sys.quotient_dim();
    std::bernoulli_distribution bit(0.3);
    for (int step = 0; step < 20; ++step) {
        Vector row(12);
        for (int i = 0; i < 12; ++i)
            if (bit(rng)) row.set(i, true);
        sys.add_relation_row(row);
        int cur = sys.quotient_dim();
        EXPECT_LE(cur, prev);
        EXPECT_GE(cur, prev - 1);
        prev = cur;
    }
}

}  // namespace
