#pragma once

#include <cstddef>
#include <vector>

#include "delliptic/rational.hpp"

namespace delliptic::linalg {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Solves A x = b for A with rows >= cols.
///
/// Gauss-Jordan elimination on the augmented matrix, pivoting on the first
/// nonzero entry of each column. Throws SingularSystem if A has rank below
/// cols, InconsistentSystem if some row reduces to 0 = nonzero.
std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b);

/// Rank by exact elimination.
std::size_t rank(const Matrix& a);

} // namespace delliptic::linalg
