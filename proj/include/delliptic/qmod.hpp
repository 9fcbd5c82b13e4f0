#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "delliptic/qseries.hpp"

namespace delliptic::qmod {

/// E2^a E4^b E6^c.
struct Monomial {
    unsigned a = 0, b = 0, c = 0;

    unsigned weight() const { return 2 * a + 4 * b + 6 * c; }
    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Ascending weight; within a weight, higher powers of E2 first, then of E4.
struct MonomialOrder {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

using Combination = std::map<Monomial, Rational, MonomialOrder>;

/// Refutation is only relative to the weight bound and the truncation order
/// that were checked.
struct NotQuasimodular {
    unsigned max_weight;
    std::size_t order;
};

/// Either the exact combination (nonzero coefficients only) or NotQuasimodular.
class FitResult {
public:
    FitResult(Combination c) : v_(std::move(c)) {}      // NOLINT(google-explicit-constructor)
    FitResult(NotQuasimodular n) : v_(n) {}             // NOLINT(google-explicit-constructor)

    bool ok() const { return std::holds_alternative<Combination>(v_); }
    const Combination& combination() const { return std::get<Combination>(v_); }
    const NotQuasimodular& refutation() const { return std::get<NotQuasimodular>(v_); }

private:
    std::variant<Combination, NotQuasimodular> v_;
};

using BasisElement = std::pair<Monomial, QSeries>;

/// Normalized Eisenstein series E_k, k in {2, 4, 6}, truncated after q^order.
QSeries eisenstein(unsigned k, std::size_t order);

/// All monomials of weight <= max_weight in MonomialOrder.
std::vector<Monomial> monomials(unsigned max_weight);

/// The monomials expanded to the given order. Requires order >= number of monomials.
std::vector<BasisElement> basis(unsigned max_weight, std::size_t order);

/// Expands a combination back into a q-series.
QSeries evaluate(const Combination& c, std::size_t order);

/// Fits f on coefficients 0..order against the quasimodular basis of weight <= max_weight.
///
/// Requires f.order() >= order and order > basis size; the solution must reproduce every
/// coefficient through `order`, otherwise NotQuasimodular is returned.
FitResult fit(const QSeries& f, unsigned max_weight, std::size_t order);

/// Same as fit() but against an explicit list of basis elements (any order).
FitResult fit_against(const QSeries& f, const std::vector<BasisElement>& basis, unsigned max_weight,
                      std::size_t order);

} // namespace delliptic::qmod
