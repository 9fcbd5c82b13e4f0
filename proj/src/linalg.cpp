#include "delliptic/linalg.hpp"

#include <string>
#include <utility>

#include "delliptic/errors.hpp"

namespace delliptic::linalg {

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw PreconditionError("matrix/vector size mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
    return y;
}

namespace {

// Reduces m in place to reduced row echelon form over its first `lead_cols`
// columns; returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t lead_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lead_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw PreconditionError("right-hand side has the wrong length");
    if (a.rows() < a.cols()) throw SingularSystem("under-determined system: fewer equations than unknowns");

    Matrix m(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        m(r, a.cols()) = b[r];
    }
    auto pivots = eliminate(m, a.cols());
    for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
        if (!m(r, a.cols()).is_zero())
            throw InconsistentSystem("no solution: equation " + std::to_string(r) + " reduces to 0 = " +
                                     m(r, a.cols()).str());
    }
    if (pivots.size() < a.cols())
        throw SingularSystem("rank " + std::to_string(pivots.size()) + " < " + std::to_string(a.cols()) +
                             " unknowns");

    std::vector<Rational> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, a.cols());
    return x;
}

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    return eliminate(m, a.cols()).size();
}

} // namespace delliptic::linalg
