#include "delliptic/qmod.hpp"

#include <sstream>
#include <tuple>

#include "delliptic/arith.hpp"
#include "delliptic/errors.hpp"
#include "delliptic/linalg.hpp"

namespace delliptic::qmod {

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, unsigned e) {
        if (e == 0) return;
        if (!first) os << '*';
        os << name;
        if (e > 1) os << '^' << e;
        first = false;
    };
    put("E2", a);
    put("E4", b);
    put("E6", c);
    if (first) os << '1';
    return os.str();
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
    return std::make_tuple(x.weight(), y.a, y.b) < std::make_tuple(y.weight(), x.a, x.b);
}

QSeries eisenstein(unsigned k, std::size_t order) {
    unsigned power;
    Rational scale;
    switch (k) {
    case 2: power = 1; scale = -24; break;
    case 4: power = 3; scale = 240; break;
    case 6: power = 5; scale = -504; break;
    default: throw PreconditionError("eisenstein: only k = 2, 4, 6 are supported, got " + std::to_string(k));
    }
    return QSeries::from_function(order, [&](std::size_t d) {
        if (d == 0) return Rational(1);
        return scale * Rational(arith::sigma(power, static_cast<std::int64_t>(d)));
    });
}

std::vector<Monomial> monomials(unsigned max_weight) {
    if (max_weight % 2 != 0) throw PreconditionError("max_weight must be even");
    std::vector<Monomial> out;
    for (unsigned w = 0; w <= max_weight; w += 2) {
        for (unsigned a = w / 2 + 1; a-- > 0;) {
            for (unsigned b = (w - 2 * a) / 4 + 1; b-- > 0;) {
                const unsigned rest = w - 2 * a - 4 * b;
                if (rest % 6 == 0) out.push_back({a, b, rest / 6});
            }
        }
    }
    return out;
}

namespace {

QSeries power(const QSeries& base, unsigned e, std::size_t order) {
    QSeries r = QSeries::constant(order, 1);
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

QSeries expand(const Monomial& m, const QSeries& e2, const QSeries& e4, const QSeries& e6) {
    const std::size_t n = e2.order();
    return power(e2, m.a, n) * power(e4, m.b, n) * power(e6, m.c, n);
}

} // namespace

std::vector<BasisElement> basis(unsigned max_weight, std::size_t order) {
    auto mons = monomials(max_weight);
    if (order < mons.size()) {
        throw PreconditionError("basis: order " + std::to_string(order) + " is below the basis size " +
                                std::to_string(mons.size()));
    }
    const auto e2 = eisenstein(2, order), e4 = eisenstein(4, order), e6 = eisenstein(6, order);
    std::vector<BasisElement> out;
    out.reserve(mons.size());
    for (const auto& m : mons) out.emplace_back(m, expand(m, e2, e4, e6));
    return out;
}

QSeries evaluate(const Combination& c, std::size_t order) {
    const auto e2 = eisenstein(2, order), e4 = eisenstein(4, order), e6 = eisenstein(6, order);
    QSeries out(order);
    for (const auto& [m, coeff] : c) out += expand(m, e2, e4, e6) * coeff;
    return out;
}

FitResult fit_against(const QSeries& f, const std::vector<BasisElement>& basis, unsigned max_weight,
                      std::size_t order) {
    if (f.order() < order) {
        throw PreconditionError("fit: series has order " + std::to_string(f.order()) + " < requested order " +
                                std::to_string(order));
    }
    if (order <= basis.size()) {
        throw PreconditionError("fit: order " + std::to_string(order) + " must exceed the basis size " +
                                std::to_string(basis.size()));
    }
    linalg::Matrix a(order + 1, basis.size());
    std::vector<Rational> rhs(order + 1);
    for (std::size_t d = 0; d <= order; ++d) {
        for (std::size_t j = 0; j < basis.size(); ++j) a(d, j) = basis[j].second[d];
        rhs[d] = f[d];
    }

    std::vector<Rational> x;
    try {
        x = linalg::solve(a, rhs);
    } catch (const InconsistentSystem&) {
        return NotQuasimodular{max_weight, order};
    }

    Combination c;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!x[j].is_zero()) c.emplace(basis[j].first, x[j]);

    // Every coefficient through `order` has to match, held-out ones included.
    QSeries rebuilt(order);
    for (std::size_t j = 0; j < basis.size(); ++j) rebuilt += basis[j].second.truncated(order) * x[j];
    if (rebuilt != f.truncated(order)) return NotQuasimodular{max_weight, order};
    return c;
}

FitResult fit(const QSeries& f, unsigned max_weight, std::size_t order) {
    auto mons = monomials(max_weight);
    if (order <= mons.size()) {
        throw PreconditionError("fit: order " + std::to_string(order) + " must exceed the basis size " +
                                std::to_string(mons.size()));
    }
    return fit_against(f, basis(max_weight, order), max_weight, order);
}

} // namespace delliptic::qmod
