#include <doctest.h>

#include <random>

#include "delliptic/chow.hpp"
#include "delliptic/errors.hpp"

using namespace delliptic;
using namespace delliptic::chow;

namespace {

const Registry& R() { return Registry::builtin(); }

ChowClass random_class(std::mt19937& rng, SpaceId s, int degree) {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
    auto c = ChowClass::zero(R(), s, degree);
    for (auto& x : c.coeffs) x = Rational(num(rng), den(rng));
    return c;
}

IntersectionProfile profile_of(const ChowClass& c) {
    const auto& sp = R().space(c.space);
    IntersectionProfile p{c.space, {}};
    for (const auto& l : sp.labels(sp.dimension() - c.degree))
        p.values[l] = pairing(R(), c, ChowClass::from_map(R(), c.space, sp.dimension() - c.degree, {{l, Rational(1)}}));
    return p;
}

} // namespace

TEST_SUITE("chow") {

TEST_CASE("pairing table entries") {
    CHECK(R().space(SpaceId::M12).pair("Delta_1", "Delta_1") == Rational(-1, 24));
    CHECK(R().space(SpaceId::M12).pair("Delta_0", "Delta_0") == Rational(0));
    CHECK(R().space(SpaceId::M2).pair("Delta_00", "Delta_0") == Rational(-4));
    CHECK(R().space(SpaceId::M2).pair("Delta_01", "Delta_1") == Rational(-1, 12));
    CHECK(R().space(SpaceId::M13).pair("Delta_01_{1,2}", "Delta_1_{1,2}") == Rational(-1));
    CHECK(R().space(SpaceId::M13).pair("Delta_11_{1,3}", "Delta_1_{1,2,3}") == Rational(-1, 24));
    CHECK(R().space(SpaceId::M21).pair("Delta_11", "Delta_11") == Rational(1, 288));
    CHECK(R().space(SpaceId::M21).pair("Gamma_(11)", "Delta_1") == Rational(-1, 24));
    CHECK(R().space(SpaceId::M3).pair("Delta_[11]", "lambda^2") == Rational(1, 288));
    CHECK(R().space(SpaceId::M3).pair("Delta_[8]", "delta_0^2") == Rational(-11, 6));
}

TEST_CASE("pairing of classes is bilinear and symmetric") {
    const auto a = ChowClass::from_map(R(), SpaceId::M12, 1, {{"Delta_0", 2}, {"Delta_1", 3}});
    const auto b = ChowClass::from_map(R(), SpaceId::M12, 1, {{"Delta_1", 1}});
    CHECK(pairing(R(), a, b) == Rational(2) - Rational(3, 24));
    CHECK(pairing(R(), a, b) == pairing(R(), b, a));
    CHECK(pairing(R(), a, ChowClass::zero(R(), SpaceId::M12, 1)) == Rational(0));
    const auto m3 = ChowClass::from_map(R(), SpaceId::M3, 2, {{"kappa_2", 1}});
    CHECK_THROWS_AS(pairing(R(), m3, m3), PreconditionError);

    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        const auto x = random_class(rng, SpaceId::M21, 2), y = random_class(rng, SpaceId::M21, 2);
        CHECK(pairing(R(), x, y) == pairing(R(), y, x));
    }
}

TEST_CASE("solve_class examples") {
    const IntersectionProfile p{SpaceId::M12, {{"Delta_0", 3}, {"Delta_1", 0}}};
    const auto c = solve_class(R(), SpaceId::M12, 1, p);
    CHECK(c == ChowClass::from_map(R(), SpaceId::M12, 1, {{"Delta_0", Rational(1, 8)}, {"Delta_1", 3}}));

    const IntersectionProfile zero{SpaceId::M3, {{"Delta_[1]", 0}, {"Delta_[4]", 0}, {"Delta_[5]", 0}, {"Delta_[6]", 0},
                                                 {"Delta_[8]", 0}, {"Delta_[10]", 0}, {"Delta_[11]", 0}}};
    CHECK(solve_class(R(), SpaceId::M3, 2, zero).is_zero());
}

TEST_CASE("solve_class inverts pairing on every perfectly paired block") {
    std::mt19937 rng(3);
    const std::vector<std::pair<SpaceId, int>> groups{{SpaceId::M12, 1}, {SpaceId::M2, 1}, {SpaceId::M2, 2},
                                                      {SpaceId::M21, 2}, {SpaceId::M3, 2}, {SpaceId::M3, 4}};
    for (const auto& [s, deg] : groups) {
        for (int i = 0; i < 5; ++i) {
            const auto c = random_class(rng, s, deg);
            CHECK(solve_class(R(), s, deg, profile_of(c)) == c);
        }
    }
}

TEST_CASE("solve_class refuses what it cannot resolve") {
    // Degree-2 classes on M13 have no complete basis.
    CHECK_THROWS_AS(solve_class(R(), SpaceId::M13, 2, {SpaceId::M13, {{"Delta_0", 1}}}), PreconditionError);
    // One equation for two unknowns.
    CHECK_THROWS_AS(solve_class(R(), SpaceId::M2, 1, {SpaceId::M2, {{"Delta_00", 1}}}), SingularSystem);
    // Label from the wrong degree.
    CHECK_THROWS_AS(solve_class(R(), SpaceId::M2, 1, {SpaceId::M2, {{"Delta_0", 1}, {"Delta_1", 1}}}), PreconditionError);
    // Profile for another space.
    CHECK_THROWS_AS(solve_class(R(), SpaceId::M2, 1, {SpaceId::M12, {{"Delta_0", 1}, {"Delta_1", 1}}}), PreconditionError);
}

TEST_CASE("unlisted intersections are never invented") {
    Registry reg = Registry::builtin();
    reg.mutable_space(SpaceId::M13).add_labels(2, {"Extra"}, false);
    CHECK_THROWS_AS(reg.space(SpaceId::M13).pair("Extra", "Delta_0"), UnlistedIntersection);
    CHECK_THROWS_AS(R().space(SpaceId::M13).pair("Delta_0", "Delta_0"), PreconditionError);
    CHECK_THROWS_AS(R().space(SpaceId::M2).pair("Nope", "Delta_0"), PreconditionError);
}

TEST_CASE("Q-class conversion") {
    const auto a = ChowClass::from_map(R(), SpaceId::M2, 1, {{"Delta_0", 1}, {"Delta_1", 1}});
    CHECK(to_q_class_basis(R(), a) == ChowClass::from_map(R(), SpaceId::M2, 1, {{"delta_0", 2}, {"delta_1", 2}}, Basis::q_class));
    const auto b = ChowClass::from_map(R(), SpaceId::M21, 2, {{"Delta_00", 1}});
    CHECK(to_q_class_basis(R(), b).coeff(R(), "delta_00") == Rational(8));
    CHECK(to_q_class_basis(R(), ChowClass::zero(R(), SpaceId::M2, 2)).is_zero());
    CHECK(to_pushforward_basis(R(), to_q_class_basis(R(), b)) == b);
    // M13 carries no Q-class data.
    CHECK_THROWS_AS(to_q_class_basis(R(), ChowClass::zero(R(), SpaceId::M13, 1)), PreconditionError);
}

TEST_CASE("pushforward from M21 to M2") {
    const auto xi = ChowClass::from_map(R(), SpaceId::M21, 2, {{"xi_1", 1}}, Basis::q_class);
    CHECK(pushforward_m21_to_m2(R(), xi) == ChowClass::from_map(R(), SpaceId::M2, 1, {{"delta_0", 1}}, Basis::q_class));
    const auto d00 = ChowClass::from_map(R(), SpaceId::M21, 2, {{"delta_00", 1}, {"delta_01a", 3}, {"delta_01b", -2}}, Basis::q_class);
    CHECK(pushforward_m21_to_m2(R(), d00).is_zero());
    const auto d11 = ChowClass::from_map(R(), SpaceId::M21, 2, {{"delta_11", 5}}, Basis::q_class);
    CHECK(pushforward_m21_to_m2(R(), d11).coeff(R(), "delta_1") == Rational(5));
    CHECK_THROWS_AS(pushforward_m21_to_m2(R(), ChowClass::zero(R(), SpaceId::M2, 1)), PreconditionError);
}

TEST_CASE("class formatting") {
    const auto c = ChowClass::from_map(R(), SpaceId::M2, 1, {{"delta_0", 6}, {"delta_1", 24}}, Basis::q_class);
    CHECK(c.str(R()) == "6*delta_0 + 24*delta_1");
    CHECK(ChowClass::zero(R(), SpaceId::M3, 2, Basis::q_class).str(R()) == "0");
    const auto n = ChowClass::from_map(R(), SpaceId::M12, 1, {{"Delta_0", Rational(-1, 8)}, {"Delta_1", 1}});
    CHECK(n.str(R()) == "-1/8*Delta_0 + Delta_1");
}

}
