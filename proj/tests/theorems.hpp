#pragma once

// Closed forms of the four locus classes, typed from their published statements.

#include <map>
#include <string>

#include "delliptic/chow.hpp"
#include "oracles.hpp"

namespace theorems {

using delliptic::Rational;
using delliptic::chow::Basis;
using delliptic::chow::ChowClass;
using delliptic::chow::Registry;
using delliptic::chow::SpaceId;
using oracle::s1;
using oracle::s3;
using oracle::s5;

inline ChowClass q(SpaceId s, int deg, std::map<std::string, Rational> m) {
    return ChowClass::from_map(Registry::builtin(), s, deg, m, Basis::q_class);
}

inline ChowClass expect_m2(std::int64_t d) {
    const Rational x(d);
    return q(SpaceId::M2, 1, {{"delta_0", 2 * s3(d) - 2 * x * s1(d)}, {"delta_1", 4 * s3(d) - 4 * s1(d)}});
}

inline ChowClass expect_m2e(std::int64_t d) {
    const Rational x(d);
    return q(SpaceId::M2, 2,
             {{"delta_00", (Rational(-22, 5) * x + Rational(2, 5)) * s1(d) + 4 * s3(d)},
              {"delta_01", (Rational(-12, 5) * x - Rational(8, 5)) * s1(d) + 4 * s3(d)}});
}

inline ChowClass expect_m21(std::int64_t d) {
    const Rational x(d);
    return q(SpaceId::M21, 2,
             {{"delta_00", -x * s1(d) / 12 + s3(d) / 12},
              {"delta_01a", s1(d) / 12 - s3(d) / 12},
              {"delta_01b", (-x - Rational(1, 12)) * s1(d) + Rational(13, 12) * s3(d)},
              {"xi_1", 2 * s3(d) - 2 * x * s1(d)},
              {"delta_11", 4 * s3(d) - 4 * s1(d)}});
}

inline ChowClass expect_m3(std::int64_t d) {
    const Rational x(d), x2(d * d);
    return q(SpaceId::M3, 2,
             {{"lambda^2", (-6264 * x2 + 6780 * x - 960) * s1(d) + (5592 * x - 5400) * s3(d) + 252 * s5(d)},
              {"lambda*delta_0", (1224 * x2 - 1068 * x + 156) * s1(d) + (-1152 * x + 840) * s3(d)},
              {"lambda*delta_1", (2160 * x2 - 696 * x + 216) * s1(d) + (-1920 * x + 240) * s3(d)},
              {"delta_0^2", (-54 * x2 + 39 * x - 6) * s1(d) + (51 * x - 30) * s3(d)},
              {"delta_0*delta_1", (-216 * x2 + 36 * x - 12) * s1(d) + 192 * x * s3(d)},
              {"delta_1^2", (-216 * x2 - 132 * x + 36) * s1(d) + (192 * x + 120) * s3(d)},
              {"kappa_2", (216 * x2 - 444 * x + 60) * s1(d) + (-192 * x + 360) * s3(d)}});
}

} // namespace theorems
