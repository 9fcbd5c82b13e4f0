#include "delliptic/qseries.hpp"

#include <algorithm>

#include "delliptic/errors.hpp"

namespace delliptic {

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("a q-series needs at least one coefficient");
}

QSeries QSeries::from_function(std::size_t order, const std::function<Rational(std::size_t)>& f) {
    QSeries s(order);
    for (std::size_t d = 0; d <= order; ++d) s.coeffs_[d] = f(d);
    return s;
}

QSeries QSeries::constant(std::size_t order, const Rational& c) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

QSeries QSeries::truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

QSeries& QSeries::operator+=(const QSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    QSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

QSeries series_arith(const QSeries& f, const QSeries& g, SeriesOp op) {
    return op == SeriesOp::add ? f + g : f * g;
}

QSeries q_derivative(const QSeries& f) {
    return QSeries::from_function(f.order(), [&](std::size_t d) {
        return f[d] * Rational(static_cast<std::int64_t>(d));
    });
}

} // namespace delliptic
