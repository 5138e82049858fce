#pragma once

#include "confhom/rational.hpp"

#include <map>
#include <utility>

namespace confhom {

// Sparse matrix over Q; explicit zeros are never stored. Immutable in spirit:
// built once by set(), then only read.
class RationalSparseMatrix {
public:
    RationalSparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int row, int col, const Rational& value);
    void add(int row, int col, const Rational& value);
    Rational get(int row, int col) const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    int nonzeros() const { return static_cast<int>(entries_.size()); }

    RationalSparseMatrix transpose() const;

    bool operator==(const RationalSparseMatrix& other) const;

private:
    void check(int row, int col) const;

    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Rational> entries_;
};

// Exact product; throws compute_error on a dimension mismatch.
RationalSparseMatrix compose(const RationalSparseMatrix& a, const RationalSparseMatrix& b);

} // namespace confhom
