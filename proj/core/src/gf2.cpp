#include "orbitope/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace orbitope::gf2 {

Vector::Vector(int size) : words_((size + 63) / 64, 0), size_(size) {}

bool Vector::get(int i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

void Vector::set(int i, bool value) {
    std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

void Vector::flip(int i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

bool Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

int Vector::weight() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

int Vector::leading_bit() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] != 0) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
}

Vector& Vector::operator^=(const Vector& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

bool Vector::operator<(const Vector& other) const {
    return words_ < other.words_;
}

bool Vector::dot(const Vector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) % 2 != 0;
}

std::string Vector::to_string() const {
    std::string s(size_, '0');
    for (int i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

void Matrix::add_row(Vector v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    rows_.push_back(std::move(v));
}

void Matrix::add_row_from_support(const std::vector<int>& positions) {
    Vector v(cols_);
    for (int p : positions) v.flip(p);
    add_row(std::move(v));
}

Vector Matrix::apply(const Vector& v) const {
    Vector out(row_count());
    for (int i = 0; i < row_count(); ++i)
        if (rows_[i].dot(v)) out.set(i, true);
    return out;
}

namespace {

// Forward elimination; returns echelon rows (nonzero) and their pivot columns.
std::pair<std::vector<Vector>, std::vector<int>> echelonize(const Matrix& m) {
    std::vector<Vector> rows = m.rows();
    std::vector<Vector> out;
    std::vector<int> pivots;
    for (auto& r : rows) {
        Vector v = r;
        for (std::size_t k = 0; k < out.size(); ++k)
            if (v.get(pivots[k])) v ^= out[k];
        int p = v.leading_bit();
        if (p < 0) continue;
        // Back-substitute into earlier rows to keep the set reduced.
        for (std::size_t k = 0; k < out.size(); ++k)
            if (out[k].get(p)) out[k] ^= v;
        out.push_back(std::move(v));
        pivots.push_back(p);
    }
    // Order rows by pivot column for canonical output.
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<Vector> sorted_rows;
    std::vector<int> sorted_pivots;
    for (std::size_t i : order) {
        sorted_rows.push_back(std::move(out[i]));
        sorted_pivots.push_back(pivots[i]);
    }
    return {std::move(sorted_rows), std::move(sorted_pivots)};
}

}  // namespace

int rank(const Matrix& m) { return static_cast<int>(echelonize(m).first.size()); }

Matrix rref(const Matrix& m) {
    auto [rows, pivots] = echelonize(m);
    Matrix out(m.cols());
    for (auto& r : rows) out.add_row(std::move(r));
    return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    auto [rows, pivots] = echelonize(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vector v(m.cols());
        v.set(c, true);
        // Solve for pivot coordinates: row k forces x[pivot_k] = row_k · x_free.
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (rows[k].get(c)) v.set(pivots[k], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_rowspace(const Matrix& m, const Vector& v) {
    auto [rows, pivots] = echelonize(m);
    Vector r = v;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (r.get(pivots[k])) r ^= rows[k];
    return r.is_zero();
}

Matrix sum_rowspaces(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("column mismatch");
    Matrix stacked(a.cols());
    for (const auto& r : a.rows()) stacked.add_row(r);
    for (const auto& r : b.rows()) stacked.add_row(r);
    return rref(stacked);
}

Matrix intersect_rowspaces(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("column mismatch");
    Matrix ra = rref(a);
    Matrix rb = rref(b);
    // Coefficient vectors (lambda | mu) with lambda*A = mu*B form the kernel
    // of the map (lambda, mu) -> lambda*A + mu*B; its matrix has one column
    // per basis row of A and B.
    int na = ra.row_count();
    int nb = rb.row_count();
    Matrix combo(na + nb);
    for (int c = 0; c < a.cols(); ++c) {
        Vector col(na + nb);
        for (int i = 0; i < na; ++i)
            if (ra.row(i).get(c)) col.set(i, true);
        for (int j = 0; j < nb; ++j)
            if (rb.row(j).get(c)) col.set(na + j, true);
        combo.add_row(std::move(col));
    }
    Matrix out(a.cols());
    for (const Vector& lm : kernel_basis(combo)) {
        Vector v(a.cols());
        for (int i = 0; i < na; ++i)
            if (lm.get(i)) v ^= ra.row(i);
        if (!v.is_zero()) out.add_row(std::move(v));
    }
    return rref(out);
}

RelationSystem::RelationSystem(std::vector<std::string> generator_labels)
    : labels_(std::move(generator_labels)), relations_(static_cast<int>(labels_.size())) {
    sorted_labels_.reserve(labels_.size());
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        sorted_labels_.emplace_back(labels_[i], i);
    std::sort(sorted_labels_.begin(), sorted_labels_.end());
    for (std::size_t i = 1; i < sorted_labels_.size(); ++i)
        if (sorted_labels_[i].first == sorted_labels_[i - 1].first)
            throw std::invalid_argument("duplicate generator label: " + sorted_labels_[i].first);
}

int RelationSystem::index_of(const std::string& label) const {
    auto it = std::lower_bound(sorted_labels_.begin(), sorted_labels_.end(),
                               std::make_pair(label, -1));
    if (it != sorted_labels_.end() && it->first == label) return it->second;
    return -1;
}

void RelationSystem::add_relation(const std::vector<std::string>& labels) {
    Vector row(generator_count());
    for (const auto& l : labels) {
        int i = index_of(l);
        if (i < 0) throw std::invalid_argument("unknown generator label: " + l);
        row.flip(i);
    }
    relations_.add_row(std::move(row));
}

void RelationSystem::add_relation_row(Vector row) { relations_.add_row(std::move(row)); }

int RelationSystem::rank() const { return gf2::rank(relations_); }

int RelationSystem::quotient_dim() const { return generator_count() - rank(); }

}  // namespace orbitope::gf2
