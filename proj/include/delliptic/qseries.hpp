#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "delliptic/rational.hpp"

namespace delliptic {

/// Power series in q truncated after q^order. Holds exactly order+1 coefficients.
///
/// Binary operations between series of different orders silently truncate to the
/// smaller order.
class QSeries {
public:
    /// The zero series of the given order.
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}
    /// Throws PreconditionError on an empty coefficient list.
    explicit QSeries(std::vector<Rational> coeffs);

    /// Coefficient of q^d is f(d) for d = 0..order.
    static QSeries from_function(std::size_t order, const std::function<Rational(std::size_t)>& f);
    static QSeries constant(std::size_t order, const Rational& c);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t d) const { return coeffs_.at(d); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    QSeries truncated(std::size_t order) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, mul };

QSeries series_arith(const QSeries& f, const QSeries& g, SeriesOp op);

/// q d/dq: multiplies the coefficient of q^d by d.
QSeries q_derivative(const QSeries& f);

} // namespace delliptic
