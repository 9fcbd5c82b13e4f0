#include "delliptic/arith.hpp"

#include <algorithm>
#include <string>

#include "delliptic/errors.hpp"

namespace delliptic::arith {

namespace {

void require_positive(std::int64_t d, const char* what) {
    if (d <= 0) throw PreconditionError(std::string(what) + ": argument must be >= 1, got " + std::to_string(d));
}

void require_at_least(std::int64_t d, std::int64_t lo, const char* what) {
    if (d < lo) {
        throw PreconditionError(std::string(what) + ": argument must be >= " + std::to_string(lo) + ", got " +
                                std::to_string(d));
    }
}

// sigma_1(1..n), index 0 unused.
std::vector<Integer> sigma1_table(std::int64_t n) {
    std::vector<Integer> t(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t a = 1; a <= n; ++a) {
        for (std::int64_t m = a; m <= n; m += a) t[static_cast<std::size_t>(m)] += a;
    }
    return t;
}

Rational sig(unsigned k, std::int64_t d) { return Rational(sigma(k, d)); }

} // namespace

std::vector<std::int64_t> divisors(std::int64_t d) {
    require_positive(d, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t a = 1; a * a <= d; ++a) {
        if (d % a != 0) continue;
        small.push_back(a);
        if (a != d / a) large.push_back(d / a);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer sigma(unsigned k, std::int64_t d) {
    require_positive(d, "sigma");
    Integer s = 0;
    for (auto a : divisors(d)) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(a), k);
        s += p;
    }
    return s;
}

Integer tau(std::int64_t d) {
    require_positive(d, "tau");
    return Integer(static_cast<unsigned long>(divisors(d).size()));
}

Integer conv2_direct(std::int64_t d) {
    require_at_least(d, 2, "conv2");
    auto s = sigma1_table(d);
    Integer total = 0;
    for (std::int64_t d1 = 1; d1 < d; ++d1) total += s[d1] * s[d - d1];
    return total;
}

Rational conv2_closed(std::int64_t d) {
    require_at_least(d, 2, "conv2");
    const Rational dd(d);
    return (Rational(-1, 2) * dd + Rational(1, 12)) * sig(1, d) + Rational(5, 12) * sig(3, d);
}

Integer conv2(std::int64_t d) {
    Integer direct = conv2_direct(d);
    if (Rational(direct) != conv2_closed(d)) {
        throw CrossCheckFailure("conv2", "direct sum " + direct.get_str() + " != closed form " +
                                             conv2_closed(d).str() + " at d=" + std::to_string(d));
    }
    return direct;
}

Integer conv2_weighted_direct(std::int64_t d) {
    require_at_least(d, 2, "conv2_weighted");
    auto s = sigma1_table(d);
    Integer total = 0;
    for (std::int64_t d1 = 1; d1 < d; ++d1) total += Integer(static_cast<long>(d1)) * s[d1] * s[d - d1];
    return total;
}

Rational conv2_weighted_closed(std::int64_t d) {
    require_at_least(d, 2, "conv2_weighted");
    const Rational dd(d);
    return (Rational(-1, 4) * dd * dd + Rational(1, 24) * dd) * sig(1, d) + Rational(5, 24) * dd * sig(3, d);
}

Integer conv2_weighted(std::int64_t d) {
    Integer direct = conv2_weighted_direct(d);
    if (Rational(direct) != conv2_weighted_closed(d)) {
        throw CrossCheckFailure("conv2_weighted", "direct sum " + direct.get_str() + " != closed form " +
                                                      conv2_weighted_closed(d).str() + " at d=" + std::to_string(d));
    }
    return direct;
}

Integer conv3_direct(std::int64_t d) {
    require_at_least(d, 3, "conv3");
    auto s = sigma1_table(d);
    Integer total = 0;
    for (std::int64_t d1 = 1; d1 < d; ++d1) {
        for (std::int64_t d2 = 1; d1 + d2 < d; ++d2) total += s[d1] * s[d2] * s[d - d1 - d2];
    }
    return total;
}

Rational conv3_closed(std::int64_t d) {
    require_at_least(d, 3, "conv3");
    const Rational dd(d);
    return (Rational(1, 8) * dd * dd - Rational(1, 16) * dd + Rational(1, 192)) * sig(1, d) +
           (Rational(-5, 32) * dd + Rational(5, 96)) * sig(3, d) + Rational(7, 192) * sig(5, d);
}

Integer conv3(std::int64_t d) {
    Integer direct = conv3_direct(d);
    if (Rational(direct) != conv3_closed(d)) {
        throw CrossCheckFailure("conv3", "direct sum " + direct.get_str() + " != closed form " +
                                             conv3_closed(d).str() + " at d=" + std::to_string(d));
    }
    return direct;
}

Integer conv2_or_zero(std::int64_t d) { return d < 2 ? Integer(0) : conv2(d); }
Integer conv3_or_zero(std::int64_t d) { return d < 3 ? Integer(0) : conv3(d); }

} // namespace delliptic::arith
