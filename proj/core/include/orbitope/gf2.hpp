#ifndef ORBITOPE_GF2_HPP
#define ORBITOPE_GF2_HPP

#include <cstdint>
#include <string>
#include <vector>

// Linear algebra over the two-element field. Vectors are packed into 64-bit
// words; all operations are exact and deterministic. Kernel bases are emitted
// in a canonical form so equal subspaces always produce equal output.

namespace orbitope::gf2 {

class Vector {
public:
    Vector() = default;
    explicit Vector(int size);

    int size() const { return size_; }
    bool get(int i) const;
    void set(int i, bool value);
    void flip(int i);
    bool is_zero() const;
    int weight() const;
    // Index of the first set bit, or -1 for the zero vector.
    int leading_bit() const;

    Vector& operator^=(const Vector& other);
    friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }
    bool operator==(const Vector& other) const = default;
    bool operator<(const Vector& other) const;

    // Parity of the intersection with another vector of the same length.
    bool dot(const Vector& other) const;

    std::string to_string() const;  // e.g. "10110"

private:
    std::vector<std::uint64_t> words_;
    int size_ = 0;
};

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const Vector& row(int i) const { return rows_[i]; }
    const std::vector<Vector>& rows() const { return rows_; }

    void add_row(Vector v);
    void add_row_from_support(const std::vector<int>& positions);

    Vector apply(const Vector& v) const;  // matrix * column vector

private:
    std::vector<Vector> rows_;
    int cols_ = 0;
};

int rank(const Matrix& m);

// Reduced row echelon form with zero rows dropped and rows ordered by pivot
// column; the result is the canonical basis of the row space.
Matrix rref(const Matrix& m);

// Canonical kernel basis: one vector per free column in ascending column
// order, each with a 1 at its free column and zeros at every other free
// column. Unique for a given kernel.
std::vector<Vector> kernel_basis(const Matrix& m);

// Membership of v in the row space of m (m need not be reduced).
bool in_rowspace(const Matrix& m, const Vector& v);

// Canonical basis of the intersection of two row spaces.
Matrix intersect_rowspaces(const Matrix& a, const Matrix& b);

// Canonical basis of the sum of two row spaces.
Matrix sum_rowspaces(const Matrix& a, const Matrix& b);

// Labeled generators with GF(2) relation rows between them.
class RelationSystem {
public:
    explicit RelationSystem(std::vector<std::string> generator_labels);

    int generator_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    int index_of(const std::string& label) const;  // -1 when absent
    const Matrix& relations() const { return relations_; }

    // Adds the row with 1s at the named generators; a label repeated an even
    // number of times cancels. Unknown labels throw.
    void add_relation(const std::vector<std::string>& labels);
    void add_relation_row(Vector row);

    int rank() const;
    int quotient_dim() const;

private:
    std::vector<std::string> labels_;
    Matrix relations_;
    std::vector<std::pair<std::string, int>> sorted_labels_;  // binary-search index
};

}  // namespace orbitope::gf2

#endif  // ORBITOPE_GF2_HPP
