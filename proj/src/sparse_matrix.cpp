#include "confhom/sparse_matrix.hpp"

#include "confhom/errors.hpp"

#include <string>
#include <vector>

namespace confhom {

RationalSparseMatrix::RationalSparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw compute_error("matrix dimensions must be non-negative");
}

void RationalSparseMatrix::check(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw compute_error("matrix index (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
}

void RationalSparseMatrix::set(int row, int col, const Rational& value) {
    check(row, col);
    if (value == 0)
        entries_.erase({row, col});
    else
        entries_[{row, col}] = value;
}

void RationalSparseMatrix::add(int row, int col, const Rational& value) {
    check(row, col);
    auto it = entries_.find({row, col});
    if (it == entries_.end()) {
        if (value != 0) entries_.emplace(std::make_pair(row, col), value);
        return;
    }
    it->second += value;
    if (it->second == 0) entries_.erase(it);
}

Rational RationalSparseMatrix::get(int row, int col) const {
    check(row, col);
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

RationalSparseMatrix RationalSparseMatrix::transpose() const {
    RationalSparseMatrix out(cols_, rows_);
    for (const auto& [key, value] : entries_) out.set(key.second, key.first, value);
    return out;
}

bool RationalSparseMatrix::operator==(const RationalSparseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RationalSparseMatrix compose(const RationalSparseMatrix& a, const RationalSparseMatrix& b) {
    if (a.cols() != b.rows())
        throw compute_error("compose: dimension mismatch (" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + ")");
    RationalSparseMatrix out(a.rows(), b.cols());
    // Group b's entries by row once, then walk a's entries.
    std::vector<std::vector<std::pair<int, Rational>>> b_rows(b.rows());
    for (const auto& [key, value] : b.entries()) b_rows[key.first].emplace_back(key.second, value);
    for (const auto& [key, value] : a.entries()) {
        const auto [i, l] = key;
        for (const auto& [j, w] : b_rows[l]) out.add(i, j, value * w);
    }
    return out;
}

} // namespace confhom
