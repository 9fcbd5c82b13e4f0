#include <doctest.h>

#include "delliptic/errors.hpp"
#include "delliptic/loci.hpp"
#include "oracles.hpp"
#include "theorems.hpp"

using namespace delliptic;
using namespace delliptic::loci;
using chow::Basis;
using oracle::s1;
using oracle::s3;
using oracle::s5;
using namespace theorems;

namespace {

const Registry& R() { return Registry::builtin(); }

Rational c2(std::int64_t d) { return Rational(oracle::conv2(d)); }
Rational c3(std::int64_t d) { return Rational(oracle::conv3(d)); }

// sum_{d1+d2=d} f(d1) sigma_1(d1) sigma_1(d2)
Rational weighted(std::int64_t d, const std::function<Rational(std::int64_t)>& f) {
    Rational s;
    for (std::int64_t i = 1; i < d; ++i) s += f(i) * s1(i) * s1(d - i);
    return s;
}

// The genus-3 contribution table, typed from its published form.
Rational expect_contrib(std::int64_t d, ContributionType t, const std::string& s) {
    const Rational a = Rational(d - 1) * s1(d);
    const Rational conv = d >= 2 ? c2(d) : Rational(0);
    const Rational w = weighted(d, [](std::int64_t i) { return Rational(i - 1); });
    const Rational conv3 = d >= 3 ? c3(d) : Rational(0);
    using T = ContributionType;
    if (s == "Delta_[1]") return t == T::D1_D13 ? 96 * a : Rational(0);
    if (s == "Delta_[5]") return t == T::D1_D12 ? 48 * w : t == T::D11_D14 ? 24 * conv : Rational(0);
    if (s == "Delta_[6]") return 0;
    if (s == "Delta_[8]") return t == T::D1_D12 ? 12 * w : t == T::D1_D13 ? -a : 24 * conv;
    if (s == "Delta_[10]") return t == T::D1_D12 ? Rational(0) : 24 * conv;
    if (s == "Delta_[11]a") return t == T::D1_D12 ? 24 * conv3 : t == T::D1_D13 ? -conv : Rational(0);
    if (s == "Delta_[11]b") return t == T::D1_D12 ? 24 * conv3 : t == T::D1_D13 ? Rational(0) : -conv;
    if (s == "Delta_[7]") return t == T::D1_D12 ? Rational(0) : t == T::D1_D13 ? 24 * conv : -24 * conv;
    FAIL("unexpected surface " << s);
    return 0;
}

} // namespace

TEST_SUITE("loci") {

TEST_CASE("auxiliary class on M12") {
    CHECK(aux_class_m12(1).is_zero());
    CHECK(aux_class_m12(2) == ChowClass::from_map(R(), SpaceId::M12, 1, {{"Delta_0", Rational(1, 8)}, {"Delta_1", 3}}));
    CHECK(aux_class_m12(3) == ChowClass::from_map(R(), SpaceId::M12, 1, {{"Delta_0", Rational(1, 3)}, {"Delta_1", 8}}));
    CHECK_THROWS_AS(aux_class_m12(0), PreconditionError);
}

TEST_CASE("auxiliary profiles on M13") {
    for (const auto& [l, v] : aux_profile_dd22_m13(1).values) CHECK(v == Rational(0));
    CHECK(aux_profile_dd22_m13(2).at("Delta_0") == Rational(6));
    CHECK(aux_profile_dd22_m13(3).at("Delta_0") == Rational(16));
    CHECK(aux_profile_dd22_m13(3).at("Delta_1_{2,3}") == Rational(0));
    const auto p = aux_profile_double_ab_m13(1, 2);
    CHECK(p.at("Delta_1_{2,3}") == Rational(1));
    CHECK(p.at("Delta_1_{1,2,3}") == Rational(1));
    CHECK(p.at("Delta_1_{1,3}") == Rational(0));
    CHECK(p.at("Delta_0") == Rational(0));
    CHECK(p == aux_profile_double_ab_m13(3, 5));
}

TEST_CASE("weighted sums over am + bn = d") {
    for (std::int64_t d = 2; d <= 40; ++d) CHECK(Rational(sum_mb(d)) == c2(d));
    CHECK(sum_mb(2, true) == 0);
    CHECK(sum_mb(3, true) == 3);
    for (std::int64_t d = 1; d <= 40; ++d) {
        Integer s = 0;
        for (std::int64_t a = 1; a <= d; ++a)
            for (std::int64_t be = 1; be <= d; ++be)
                for (std::int64_t m = 1; a * m < d; ++m)
                    if ((d - a * m) % be == 0 && a != be) s += m * be;
        CHECK(sum_mb(d, true) == s);
    }
}

TEST_CASE("pullback, s_S pushforward and product pairings") {
    const auto c = ChowClass::from_map(R(), SpaceId::M12, 1, {{"Delta_0", 2}, {"Delta_1", 5}});
    const auto pulled = pullback_forget_third(R(), c);
    CHECK(pulled.coeff(R(), "Delta_0") == Rational(2));
    CHECK(pulled.coeff(R(), "Delta_1_{1,2}") == Rational(5));
    CHECK(pulled.coeff(R(), "Delta_1_{1,2,3}") == Rational(5));
    CHECK(pulled.coeff(R(), "Delta_1_{1,3}") == Rational(0));
    const auto pushed = push_boundary_s(R(), c, "{1,3}");
    CHECK(pushed.coeff(R(), "Delta_01_{1,3}") == Rational(2));
    CHECK(pushed.coeff(R(), "Delta_11_{1,3}") == Rational(5));
    CHECK_THROWS_AS(push_boundary_s(R(), c, "{2,3}"), PreconditionError);

    const ProductClass pt{SpaceId::M11, SpaceId::M11, {{Rational(1), "p", "1"}}};
    const ProductClass diag{SpaceId::M11, SpaceId::M11, {{Rational(1), "p", "1"}, {Rational(1), "1", "p"}}};
    CHECK(product_pairing(R(), pt, diag) == Rational(1));
    CHECK(product_pairing(R(), pt, pt) == Rational(0));
}

TEST_CASE("genus-2 profiles: worked values") {
    CHECK(assemble_m2_profile(1) == IntersectionProfile{SpaceId::M2, {{"Delta_00", 0}, {"Delta_01", 0}}});
    CHECK(assemble_m2_profile(2) == IntersectionProfile{SpaceId::M2, {{"Delta_00", 12}, {"Delta_01", 2}}});
    CHECK(assemble_m2_profile(4) == IntersectionProfile{SpaceId::M2, {{"Delta_00", 84}, {"Delta_01", 34}}});
    CHECK(assemble_m2E_profile(2) == IntersectionProfile{SpaceId::M2, {{"Delta_0", 3}, {"Delta_1", 2}}});
    CHECK(assemble_m2E_profile(3) == IntersectionProfile{SpaceId::M2, {{"Delta_0", 8}, {"Delta_1", 12}}});
    const auto p = assemble_m21_profile(2);
    CHECK(p.at("Delta_00") == Rational(12));
    CHECK(p.at("Delta_01a") == Rational(1));
    CHECK(p.at("Delta_01b") == Rational(1));
    CHECK(p.at("Xi_1") == Rational(-1, 8));
    CHECK(p.at("Delta_11") == Rational(-1, 24));
}

TEST_CASE("genus-2 profiles: both routes match the oracle for d <= 30") {
    for (std::int64_t d = 1; d <= 30; ++d) {
        CAPTURE(d);
        const Rational a = Rational(d - 1) * s1(d);
        const Rational conv = d >= 2 ? c2(d) : Rational(0);
        CHECK(m2_profile_summed(d) == IntersectionProfile{SpaceId::M2, {{"Delta_00", 4 * a}, {"Delta_01", 2 * conv}}});
        CHECK(m2e_profile_summed(d) == IntersectionProfile{SpaceId::M2, {{"Delta_0", a}, {"Delta_1", 2 * conv}}});
        const auto m21 = m21_profile_summed(d);
        CHECK(m21 == m21_profile_closed(d));
        CHECK(m21.at("Delta_01a") == m21.at("Delta_01b"));
        CHECK(m21.at("Xi_1") == -a / 24);
    }
}

TEST_CASE("genus-2 classes match the closed forms for d <= 30") {
    for (std::int64_t d = 1; d <= 30; ++d) {
        CAPTURE(d);
        CHECK(class_m2(d) == expect_m2(d));
        CHECK(class_m2E(d) == expect_m2e(d));
        CHECK(class_m21(d) == expect_m21(d));
        CHECK(chow::pushforward_m21_to_m2(R(), class_m21(d)) == class_m2(d));
    }
    CHECK(class_m2(1).is_zero());
    CHECK(class_m2E(1).is_zero());
    CHECK(class_m21(1).is_zero());
}

TEST_CASE("genus-2 classes: worked values") {
    CHECK(class_m2(2).str(R()) == "6*delta_0 + 24*delta_1");
    CHECK(class_m2(3).str(R()) == "32*delta_0 + 96*delta_1");
    CHECK(class_m2E(2).str(R()) == "54/5*delta_00 + 84/5*delta_01");
    CHECK(class_m21(2).coeff(R(), "delta_00") == Rational(1, 4));
    CHECK(class_m21(2).coeff(R(), "xi_1") == Rational(6));
    CHECK(class_m21(2).coeff(R(), "delta_11") == Rational(24));
}

TEST_CASE("genus-3 contribution table") {
    for (std::int64_t d = 1; d <= 12; ++d) {
        for (const auto& s : m3_test_surfaces()) {
            for (auto t : {ContributionType::D1_D12, ContributionType::D1_D13, ContributionType::D11_D14}) {
                CAPTURE(d);
                CAPTURE(s);
                CAPTURE(to_string(t));
                CHECK(contrib_m3(d, t, s) == expect_contrib(d, t, s));
            }
        }
    }
    CHECK_THROWS_AS(contrib_m3(3, ContributionType::D1_D12, "Delta_[2]"), PreconditionError);
}

TEST_CASE("table-sourced entries are exactly the Gamma surfaces in the first column") {
    for (const auto& s : m3_test_surfaces()) {
        const bool gamma = s == "Delta_[5]" || s == "Delta_[6]" || s == "Delta_[11]b";
        CHECK(table_sourced(ContributionType::D1_D12, s) == gamma);
        CHECK_FALSE(table_sourced(ContributionType::D1_D13, s));
        CHECK_FALSE(table_sourced(ContributionType::D11_D14, s));
    }
}

TEST_CASE("genus-3 profile and class") {
    for (std::int64_t d = 1; d <= 30; ++d) CHECK(Rational(cxc_intersection(d)) == 48 * (Rational(d) * s3(d) - s1(d)));
    const auto p = assemble_m3_profile(2);
    CHECK(p.at("Delta_[1]") == Rational(288));
    CHECK(p.at("Delta_[4]") == Rational(72));
    for (const auto& [l, v] : assemble_m3_profile(1).values) CHECK(v == Rational(0));
    for (std::int64_t d = 1; d <= 12; ++d) {
        CAPTURE(d);
        CHECK(m3_profile_summed(d) == m3_profile_closed(d));
        CHECK(class_m3(d) == expect_m3(d));
    }
    CHECK(class_m3(1).is_zero());
    CHECK(class_m3(2).coeff(R(), "kappa_2") == Rational(-108));
    CHECK(class_m3(2).coeff(R(), "lambda^2") == Rational((-25056 + 13560 - 960) * 3 + (11184 - 5400) * 9 + 252 * 33));
}

TEST_CASE("a corrupted table is caught by the internal cross-checks") {
    Registry bad = Registry::builtin();
    bad.mutable_space(SpaceId::M2).set_pairing("Delta_01", "Delta_1", Rational(-1, 24));
    CHECK_THROWS_AS(class_m2(3, bad), CrossCheckFailure);
    Registry bad21 = Registry::builtin();
    bad21.mutable_space(SpaceId::M21).set_pairing("Delta_1", "Gamma_(11)", Rational(1, 24));
    CHECK_THROWS_AS(m3_profile_summed(4, bad21), CrossCheckFailure);
}

TEST_CASE("appendix contributions") {
    CHECK(appendix_typeA(1) == Rational(0));
    CHECK(appendix_typeA(4) == Rational(1));
    CHECK(appendix_typeA(6) == Rational(4));
    CHECK(appendix_typeB_extra(2) == Rational(0));
    CHECK(appendix_typeB_extra(3) == Rational(3));
    for (std::int64_t d = 1; d <= 40; ++d) {
        CAPTURE(d);
        CHECK(appendix_typeA(d) == appendix_typeA_closed(d));
        CHECK(appendix_typeB_extra(d) == appendix_typeB_closed(d));
        const Rational conv = d >= 2 ? c2(d) : Rational(0);
        CHECK(appendix_typeA(d) + appendix_typeB_extra(d) == conv + (Rational(1, 3) - Rational(d, 3)) * s1(d));
    }
    const auto fits = appendix_cancellation_series(30);
    CHECK_FALSE(fits.type_a.ok());
    CHECK_FALSE(fits.type_b.ok());
    CHECK(fits.sum.ok());
    CHECK_THROWS_AS(appendix_cancellation_series(5), PreconditionError);
}

TEST_CASE("generating series and certification") {
    const auto s = coefficient_series(Family::m2, "delta_0", 10);
    CHECK(s[0] == Rational(0));
    CHECK(s[1] == Rational(0));
    CHECK(s[2] == Rational(6));
    CHECK(s[3] == Rational(32));
    CHECK_THROWS_AS(coefficient_series(Family::m2, "kappa_2", 10), PreconditionError);
    CHECK(parse_family("m21") == Family::m21);
    CHECK_THROWS_AS(parse_family("m4"), PreconditionError);

    const auto all = qmod_certify_all(30);
    CHECK(all.size() == 2 + 2 + 5 + 7);
    for (const auto& c : all) {
        CAPTURE(c.label);
        REQUIRE(c.fit.ok());
        CHECK(qmod::evaluate(c.fit.combination(), 30) == c.series);
    }
}

}
