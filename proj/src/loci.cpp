#include "delliptic/loci.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "delliptic/arith.hpp"
#include "delliptic/covers.hpp"
#include "delliptic/errors.hpp"

namespace delliptic::loci {

using chow::Basis;

namespace {

Rational sigma1(std::int64_t d) { return Rational(arith::sigma(1, d)); }
Rational sigma3(std::int64_t d) { return Rational(arith::sigma(3, d)); }
Rational sigma5(std::int64_t d) { return Rational(arith::sigma(5, d)); }
Rational conv2z(std::int64_t d) { return Rational(arith::conv2_or_zero(d)); }
Rational conv3z(std::int64_t d) { return Rational(arith::conv3_or_zero(d)); }
Rational conv2wz(std::int64_t d) { return d < 2 ? Rational(0) : Rational(arith::conv2_weighted(d)); }

void require_degree(std::int64_t d, const char* what) {
    if (d < 1) throw PreconditionError(std::string(what) + ": d must be >= 1, got " + std::to_string(d));
}

std::string describe(const IntersectionProfile& p) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : p.values) {
        out += (first ? "" : ", ") + k + ": " + v.str();
        first = false;
    }
    return out + "}";
}

void require_equal(const std::string& check, std::int64_t d, const IntersectionProfile& a,
                   const IntersectionProfile& b) {
    if (a == b) return;
    throw CrossCheckFailure(check, "routes disagree at d=" + std::to_string(d) + ": " + describe(a) + " vs " +
                                       describe(b));
}

void require_equal(const std::string& check, std::int64_t d, const Rational& a, const Rational& b) {
    if (a == b) return;
    throw CrossCheckFailure(check, "at d=" + std::to_string(d) + ": " + a.str() + " != " + b.str());
}

void require_equal(const std::string& check, std::int64_t d, const Registry& reg, const ChowClass& a,
                   const ChowClass& b) {
    if (a == b) return;
    throw CrossCheckFailure(check, "at d=" + std::to_string(d) + ": " + a.str(reg) + " != " + b.str(reg));
}

ChowClass unit(const Registry& reg, SpaceId space, int degree, const std::string& label) {
    return ChowClass::from_map(reg, space, degree, {{label, Rational(1)}});
}

// sum over d1 + d2 = d of f(d1, d2).
template <class F>
Rational over_pairs(std::int64_t d, F f) {
    Rational total;
    for (std::int64_t d1 = 1; d1 < d; ++d1) total += f(d1, d - d1);
    return total;
}

// sum over divisors a of d, with m = d / a, of f(a, m).
template <class F>
Rational over_factorizations(std::int64_t d, F f) {
    Rational total;
    for (auto a : arith::divisors(d)) total += f(a, d / a);
    return total;
}

// Isogeny-count version of conv2: ordered pairs of covers of one elliptic curve.
Rational isogeny_pairs(std::int64_t d) {
    return over_pairs(d, [](std::int64_t d1, std::int64_t d2) {
        return Rational(Integer(covers::count_sublattices(d1) * covers::count_sublattices(d2)));
    });
}

} // namespace

// ---------------------------------------------------------------------------
// Product cycles

ProductClass ProductClass::of(const Registry& reg, const ChowClass& c, SpaceId right, const std::string& right_label) {
    const auto pc = chow::to_pushforward_basis(reg, c);
    const auto& labels = reg.space(c.space).labels(c.degree);
    ProductClass out{c.space, right, {}};
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!pc.coeffs[i].is_zero()) out.terms.push_back({pc.coeffs[i], labels[i], right_label});
    return out;
}

ProductClass& ProductClass::operator+=(const ProductClass& o) {
    if (left != o.left || right != o.right) throw PreconditionError("adding cycles on different products");
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

Rational product_pairing(const Registry& reg, const ProductClass& a, const ProductClass& b) {
    if (a.left != b.left || a.right != b.right) throw PreconditionError("pairing cycles on different products");
    const auto& l = reg.space(a.left);
    const auto& r = reg.space(a.right);
    Rational total;
    for (const auto& x : a.terms) {
        for (const auto& y : b.terms) {
            const Rational left = l.pair_or_zero(x.left, y.left);
            if (left.is_zero()) continue;
            total += x.coeff * y.coeff * left * r.pair_or_zero(x.right, y.right);
        }
    }
    return total;
}

Rational apply_functional(const Registry& reg, const IntersectionProfile& f, const ChowClass& c) {
    if (f.space != c.space) throw PreconditionError("functional and class live on different spaces");
    const auto pc = chow::to_pushforward_basis(reg, c);
    const auto& labels = reg.space(c.space).labels(c.degree);
    Rational total;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!pc.coeffs[i].is_zero()) total += pc.coeffs[i] * f.at(labels[i]);
    return total;
}

ChowClass pullback_forget_third(const Registry& reg, const ChowClass& c) {
    if (c.space != SpaceId::M12 || c.degree != 1) throw PreconditionError("pullback expects a divisor on M12");
    const auto pc = chow::to_pushforward_basis(reg, c);
    const Rational a = pc.coeff(reg, "Delta_0"), b = pc.coeff(reg, "Delta_1");
    return ChowClass::from_map(reg, SpaceId::M13, 1, {{"Delta_0", a}, {"Delta_1_{1,2}", b}, {"Delta_1_{1,2,3}", b}});
}

ChowClass push_boundary_s(const Registry& reg, const ChowClass& c, const std::string& s) {
    if (c.space != SpaceId::M12 || c.degree != 1) throw PreconditionError("s_S pushes forward divisors on M12");
    if (s != "{1,2}" && s != "{1,3}") throw PreconditionError("s_S is only defined for S = {1,2}, {1,3}");
    const auto pc = chow::to_pushforward_basis(reg, c);
    return ChowClass::from_map(reg, SpaceId::M13, 2,
                               {{"Delta_01_" + s, pc.coeff(reg, "Delta_0")}, {"Delta_11_" + s, pc.coeff(reg, "Delta_1")}});
}

// ---------------------------------------------------------------------------
// Auxiliary loci

IntersectionProfile aux_profile_m12(std::int64_t d) {
    require_degree(d, "aux_profile_m12");
    return {SpaceId::M12, {{"Delta_0", Rational(d - 1) * sigma1(d)}, {"Delta_1", Rational(0)}}};
}

ChowClass aux_class_m12(std::int64_t d, const Registry& reg) {
    require_degree(d, "aux_class_m12");
    const Rational c = Rational(d - 1) * sigma1(d);
    auto closed = ChowClass::from_map(reg, SpaceId::M12, 1, {{"Delta_0", c / 24}, {"Delta_1", c}});
    auto solved = chow::solve_class(reg, SpaceId::M12, 1, aux_profile_m12(d));
    require_equal("aux_class_m12", d, reg, solved, closed);
    return closed;
}

IntersectionProfile aux_profile_dd22_m13(std::int64_t a) {
    require_degree(a, "aux_profile_dd22_m13");
    return {SpaceId::M13,
            {{"Delta_0", Rational(covers::count_dd22(a))},
             {"Delta_1_{1,2,3}", Rational(0)},
             {"Delta_1_{2,3}", Rational(0)},
             {"Delta_1_{1,3}", Rational(0)},
             {"Delta_1_{1,2}", Rational(0)}}};
}

IntersectionProfile aux_profile_double_ab_m13(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw PreconditionError("aux_profile_double_ab_m13: a, b must be >= 1");
    return {SpaceId::M13,
            {{"Delta_0", Rational(0)},
             {"Delta_1_{1,2,3}", Rational(1)},
             {"Delta_1_{2,3}", Rational(1)},
             {"Delta_1_{1,3}", Rational(0)},
             {"Delta_1_{1,2}", Rational(0)}}};
}

Integer sum_mb(std::int64_t d, bool distinct_ab) {
    Integer total = 0;
    for (std::int64_t a = 1; a < d; ++a)
        for (std::int64_t m = 1; a * m < d; ++m) {
            const std::int64_t rest = d - a * m;
            for (std::int64_t b = 1; b <= rest; ++b) {
                if (rest % b != 0 || (distinct_ab && a == b)) continue;
                total += m * b;
            }
        }
    return total;
}

// ---------------------------------------------------------------------------
// Genus 2

IntersectionProfile m2_profile_closed(std::int64_t d) {
    require_degree(d, "m2_profile_closed");
    return {SpaceId::M2, {{"Delta_00", Rational(4 * (d - 1)) * sigma1(d)}, {"Delta_01", 2 * conv2z(d)}}};
}

namespace {

// Intersection with a curve class C on M12, pushed forward into the boundary divisor
// Delta_0 of M2: covers of types (Delta_0, Delta_1), (Delta_0, Delta_0), (Delta_00, Delta_0).
Rational m2_via_m12(std::int64_t d, const Registry& reg, const ChowClass& c) {
    const Rational t01 = 2 * chow::pairing(reg, c, aux_class_m12(d, reg));
    const ChowClass pulled = pullback_forget_third(reg, c);
    const Rational t00 = over_factorizations(d, [&](std::int64_t a, std::int64_t m) {
        return Rational(m) * apply_functional(reg, aux_profile_dd22_m13(a), pulled);
    });
    const Rational t000 = 2 * Rational(sum_mb(d)) * chow::pairing(reg, c, unit(reg, SpaceId::M12, 1, "Delta_0"));
    return t01 + t00 + t000;
}

// Intersection with a curve class on M11 x M11: covers of type (Delta_1, Delta_1).
Rational m2_via_m11xm11(std::int64_t d, const Registry& reg, const ProductClass& c) {
    const ProductClass diagonal{SpaceId::M11, SpaceId::M11, {{Rational(1), "p", "1"}, {Rational(1), "1", "p"}}};
    return 2 * isogeny_pairs(d) * product_pairing(reg, c, diagonal);
}

} // namespace

IntersectionProfile m2_profile_summed(std::int64_t d, const Registry& reg) {
    require_degree(d, "m2_profile_summed");
    const Rational d00 = m2_via_m12(d, reg, unit(reg, SpaceId::M12, 1, "Delta_0"));
    const Rational d01_m12 = m2_via_m12(d, reg, unit(reg, SpaceId::M12, 1, "Delta_1"));
    const ProductClass point_x_m11{SpaceId::M11, SpaceId::M11, {{Rational(1), "p", "1"}}};
    const Rational d01_m11 = m2_via_m11xm11(d, reg, point_x_m11);
    require_equal("m2_delta01_routes", d, d01_m12, d01_m11);
    return {SpaceId::M2, {{"Delta_00", d00}, {"Delta_01", d01_m11}}};
}

IntersectionProfile assemble_m2_profile(std::int64_t d, const Registry& reg) {
    auto closed = m2_profile_closed(d);
    require_equal("m2_profile", d, closed, m2_profile_summed(d, reg));
    return closed;
}

ChowClass theorem_m2(std::int64_t d, const Registry& reg) {
    require_degree(d, "theorem_m2");
    const Rational s1 = sigma1(d), s3 = sigma3(d), dd(d);
    return ChowClass::from_map(reg, SpaceId::M2, 1, {{"delta_0", 2 * s3 - 2 * dd * s1}, {"delta_1", 4 * s3 - 4 * s1}},
                               Basis::q_class);
}

ChowClass class_m2(std::int64_t d, const Registry& reg) {
    const auto solved = chow::to_q_class_basis(reg, chow::solve_class(reg, SpaceId::M2, 1, assemble_m2_profile(d, reg)));
    require_equal("class_m2", d, reg, solved, theorem_m2(d, reg));
    return solved;
}

IntersectionProfile m2e_profile_closed(std::int64_t d) {
    require_degree(d, "m2e_profile_closed");
    return {SpaceId::M2, {{"Delta_0", Rational(d - 1) * sigma1(d)}, {"Delta_1", 2 * conv2z(d)}}};
}

IntersectionProfile m2e_profile_summed(std::int64_t d) {
    require_degree(d, "m2e_profile_summed");
    // An index-d sublattice together with a nonzero point of the quotient.
    const Rational pointed = Rational(d - 1) * Rational(covers::count_sublattices(d));
    return {SpaceId::M2, {{"Delta_0", pointed}, {"Delta_1", 2 * isogeny_pairs(d)}}};
}

IntersectionProfile assemble_m2E_profile(std::int64_t d) {
    auto closed = m2e_profile_closed(d);
    require_equal("m2e_profile", d, closed, m2e_profile_summed(d));
    return closed;
}

ChowClass theorem_m2E(std::int64_t d, const Registry& reg) {
    require_degree(d, "theorem_m2E");
    const Rational s1 = sigma1(d), s3 = sigma3(d), dd(d);
    return ChowClass::from_map(reg, SpaceId::M2, 2,
                               {{"delta_00", (Rational(-22, 5) * dd + Rational(2, 5)) * s1 + 4 * s3},
                                {"delta_01", (Rational(-12, 5) * dd - Rational(8, 5)) * s1 + 4 * s3}},
                               Basis::q_class);
}

ChowClass class_m2E(std::int64_t d, const Registry& reg) {
    const auto solved = chow::to_q_class_basis(reg, chow::solve_class(reg, SpaceId::M2, 2, assemble_m2E_profile(d)));
    require_equal("class_m2E", d, reg, solved, theorem_m2E(d, reg));
    return solved;
}

IntersectionProfile m21_profile_closed(std::int64_t d) {
    require_degree(d, "m21_profile_closed");
    const Rational c2 = conv2z(d), a = Rational(d - 1) * sigma1(d);
    return {SpaceId::M21,
            {{"Delta_00", 4 * a},
             {"Delta_01a", c2},
             {"Delta_01b", c2},
             {"Xi_1", -a / 24},
             {"Delta_11", -c2 / 24}}};
}

namespace {

// Surfaces on M12 x M11, type (Delta_1, Delta_1).
Rational m21_via_m12xm11(std::int64_t d, const Registry& reg, const Tensor& surface) {
    const ProductClass test{SpaceId::M12, SpaceId::M11, {{Rational(1), "p", "1"}, {Rational(1), "Delta_1", "p"}}};
    const ProductClass s{SpaceId::M12, SpaceId::M11, {surface}};
    return product_pairing(reg, test, s) * isogeny_pairs(d);
}

// Surfaces on M13 given by a boundary divisor: types (Delta_0, Delta_1), (Delta_0, Delta_0),
// (Delta_00, Delta_0).
Rational m21_via_m13(std::int64_t d, const Registry& reg, const std::string& divisor) {
    const ChowClass s = unit(reg, SpaceId::M13, 1, divisor);
    const ChowClass aux = aux_class_m12(d, reg);
    const ChowClass pushed = push_boundary_s(reg, aux, "{1,2}") + push_boundary_s(reg, aux, "{1,3}");
    const Rational t01 = chow::pairing(reg, s, pushed);
    const Rational t00 = over_factorizations(d, [&](std::int64_t a, std::int64_t m) {
        return Rational(m) * apply_functional(reg, aux_profile_dd22_m13(a), s);
    });
    Rational t000;
    for (std::int64_t a = 1; a < d; ++a)
        for (std::int64_t m = 1; a * m < d; ++m) {
            const std::int64_t rest = d - a * m;
            for (std::int64_t b = 1; b <= rest; ++b)
                if (rest % b == 0) t000 += Rational(m * b) * apply_functional(reg, aux_profile_double_ab_m13(a, b), s);
        }
    return t01 + t00 + t000;
}

} // namespace

IntersectionProfile m21_profile_summed(std::int64_t d, const Registry& reg) {
    require_degree(d, "m21_profile_summed");
    const Rational d01a = m21_via_m12xm11(d, reg, {Rational(1), "1", "p"});
    const Rational d01b = m21_via_m12xm11(d, reg, {Rational(1), "Delta_0", "1"});
    const Rational d11 = m21_via_m12xm11(d, reg, {Rational(1), "Delta_1", "1"});
    require_equal("m21_delta01a_routes", d, d01a, m21_via_m13(d, reg, "Delta_1_{2,3}"));
    require_equal("m21_delta01b_routes", d, d01b, m21_via_m13(d, reg, "Delta_1_{1,2,3}"));
    return {SpaceId::M21,
            {{"Delta_00", m21_via_m13(d, reg, "Delta_0")},
             {"Delta_01a", d01a},
             {"Delta_01b", d01b},
             {"Xi_1", m21_via_m13(d, reg, "Delta_1_{1,3}")},
             {"Delta_11", d11}}};
}

IntersectionProfile assemble_m21_profile(std::int64_t d, const Registry& reg) {
    auto closed = m21_profile_closed(d);
    require_equal("m21_profile", d, closed, m21_profile_summed(d, reg));
    return closed;
}

ChowClass theorem_m21(std::int64_t d, const Registry& reg) {
    require_degree(d, "theorem_m21");
    const Rational s1 = sigma1(d), s3 = sigma3(d), dd(d);
    return ChowClass::from_map(reg, SpaceId::M21, 2,
                               {{"delta_00", -dd * s1 / 12 + s3 / 12},
                                {"delta_01a", s1 / 12 - s3 / 12},
                                {"delta_01b", (-dd - Rational(1, 12)) * s1 + Rational(13, 12) * s3},
                                {"xi_1", 2 * s3 - 2 * dd * s1},
                                {"delta_11", 4 * s3 - 4 * s1}},
                               Basis::q_class);
}

ChowClass class_m21(std::int64_t d, const Registry& reg) {
    const auto solved =
        chow::to_q_class_basis(reg, chow::solve_class(reg, SpaceId::M21, 2, assemble_m21_profile(d, reg)));
    require_equal("class_m21", d, reg, solved, theorem_m21(d, reg));
    require_equal("m21_pushforward", d, reg, chow::pushforward_m21_to_m2(reg, solved), class_m2(d, reg));
    return solved;
}

// ---------------------------------------------------------------------------
// Genus 3

std::string to_string(ContributionType t) {
    switch (t) {
    case ContributionType::D1_D12: return "D1_D12";
    case ContributionType::D1_D13: return "D1_D13";
    case ContributionType::D11_D14: return "D11_D14";
    }
    return "?";
}

namespace {

struct SurfaceEntry {
    std::string label;
    std::string m21_label;
    std::string m11_label; // "p" or "1"
};

const std::vector<SurfaceEntry>& surface_table() {
    static const std::vector<SurfaceEntry> table{
        {"Delta_[1]", "Delta_00", "p"},      {"Delta_[5]", "Gamma_(5)", "1"},   {"Delta_[6]", "Gamma_(6)", "1"},
        {"Delta_[8]", "Xi_1", "p"},          {"Delta_[10]", "Delta_01a", "p"},  {"Delta_[11]a", "Delta_11", "p"},
        {"Delta_[11]b", "Gamma_(11)", "1"},  {"Delta_[7]", "Delta_01b", "p"},
    };
    return table;
}

const SurfaceEntry& find_surface(const std::string& label) {
    for (const auto& e : surface_table())
        if (e.label == label) return e;
    throw PreconditionError("no decomposition registered for test surface '" + label + "'");
}

// Forgetful pushforward u: M21 -> M2 on the classes that occur. Surfaces follow the
// Q-class statement (xi_1 -> delta_0, delta_11 -> delta_1, the rest -> 0); the curve
// images are the table-sourced ones.
std::optional<std::string> forget_point(const std::string& m21_label) {
    static const std::map<std::string, std::optional<std::string>> images{
        {"Delta_00", std::nullopt},  {"Delta_01a", std::nullopt}, {"Delta_01b", std::nullopt},
        {"Xi_1", "Delta_0"},         {"Delta_11", "Delta_1"},     {"Gamma_(5)", "Delta_00"},
        {"Gamma_(6)", std::nullopt}, {"Gamma_(11)", "Delta_01"},
    };
    return images.at(m21_label);
}

} // namespace

const std::vector<std::string>& m3_test_surfaces() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> out;
        for (const auto& e : surface_table()) out.push_back(e.label);
        return out;
    }();
    return labels;
}

ProductClass m3_surface_decomposition(const Registry& reg, const std::string& surface) {
    const auto& e = find_surface(surface);
    reg.space(SpaceId::M21).codim_of(e.m21_label);
    return {SpaceId::M21, SpaceId::M11, {{Rational(1), e.m21_label, e.m11_label}}};
}

bool table_sourced(ContributionType t, const std::string& surface) {
    const auto& e = find_surface(surface);
    return t == ContributionType::D1_D12 && e.m21_label.rfind("Gamma_", 0) == 0;
}

Rational contrib_m3(std::int64_t d, ContributionType t, const std::string& surface, const Registry& reg) {
    require_degree(d, "contrib_m3");
    const ProductClass s = m3_surface_decomposition(reg, surface);
    switch (t) {
    case ContributionType::D1_D12: {
        ProductClass pushed{SpaceId::M2, SpaceId::M11, {}};
        for (const auto& term : s.terms)
            if (auto image = forget_point(term.left)) pushed.terms.push_back({term.coeff, *image, term.right});
        if (pushed.terms.empty()) return Rational(0);
        Rational total;
        for (std::int64_t d1 = 1; d1 < d; ++d1) {
            ProductClass test = ProductClass::of(reg, class_m2E(d1, reg), SpaceId::M11, "1");
            test += ProductClass::of(reg, class_m2(d1, reg), SpaceId::M11, "p");
            total += sigma1(d - d1) * product_pairing(reg, pushed, test);
        }
        return 12 * total;
    }
    case ContributionType::D1_D13: {
        // pr_1 pushes A x p to A and kills A x [M11].
        ChowClass projected = ChowClass::zero(reg, SpaceId::M21, 2);
        bool any = false;
        for (const auto& term : s.terms) {
            if (term.right != "p") continue;
            projected += term.coeff * unit(reg, SpaceId::M21, 2, term.left);
            any = true;
        }
        if (!any) return Rational(0);
        return 24 * chow::pairing(reg, projected, class_m21(d, reg));
    }
    case ContributionType::D11_D14: {
        const ProductClass test{SpaceId::M21, SpaceId::M11,
                                {{Rational(1), "Delta_01a", "1"}, {Rational(1), "Delta_1", "p"}}};
        return 24 * isogeny_pairs(d) * product_pairing(reg, s, test);
    }
    }
    throw PreconditionError("unknown contribution type");
}

Integer cxc_intersection(std::int64_t d) {
    require_degree(d, "cxc_intersection");
    Integer total = 0;
    for (auto a : arith::divisors(d)) total += covers::count_dd2222_g2(a) * static_cast<long>(d / a);
    const Integer closed = 48 * (Integer(static_cast<long>(d)) * arith::sigma(3, d) - arith::sigma(1, d));
    if (total != closed)
        throw CrossCheckFailure("cxc_intersection", "at d=" + std::to_string(d) + ": " + total.get_str() +
                                                        " != 48(d sigma_3 - sigma_1) = " + closed.get_str());
    return total;
}

IntersectionProfile m3_profile_closed(std::int64_t d) {
    require_degree(d, "m3_profile_closed");
    const Rational s1 = sigma1(d), s3 = sigma3(d), dd(d);
    const Rational c2 = conv2z(d), w = conv2wz(d), c3 = conv3z(d);
    const Rational a = (dd - 1) * s1;
    return {SpaceId::M3,
            {{"Delta_[1]", 96 * a},
             {"Delta_[4]", 24 * (dd * s3 - s1) - 96 * a},
             {"Delta_[5]", 24 * (2 * w - c2)},
             {"Delta_[6]", Rational(0)},
             {"Delta_[8]", 12 * (w + c2) - a},
             {"Delta_[10]", 48 * c2},
             {"Delta_[11]", 24 * c3 - c2}}};
}

IntersectionProfile m3_profile_summed(std::int64_t d, const Registry& reg) {
    require_degree(d, "m3_profile_summed");
    std::map<std::string, Rational> row;
    for (const auto& label : m3_test_surfaces()) {
        Rational total;
        for (auto t : {ContributionType::D1_D12, ContributionType::D1_D13, ContributionType::D11_D14})
            total += contrib_m3(d, t, label, reg);
        row[label] = total;
    }
    require_equal("m3_delta11_routes", d, row.at("Delta_[11]a"), row.at("Delta_[11]b"));
    require_equal("m3_delta7_vanishing", d, row.at("Delta_[7]"), Rational(0));
    const Rational d4 = Rational(cxc_intersection(d)) / 2 - row.at("Delta_[1]");
    return {SpaceId::M3,
            {{"Delta_[1]", row.at("Delta_[1]")},
             {"Delta_[4]", d4},
             {"Delta_[5]", row.at("Delta_[5]")},
             {"Delta_[6]", row.at("Delta_[6]")},
             {"Delta_[8]", row.at("Delta_[8]")},
             {"Delta_[10]", row.at("Delta_[10]")},
             {"Delta_[11]", row.at("Delta_[11]a")}}};
}

IntersectionProfile assemble_m3_profile(std::int64_t d, const Registry& reg) {
    auto closed = m3_profile_closed(d);
    require_equal("m3_profile", d, closed, m3_profile_summed(d, reg));
    return closed;
}

ChowClass theorem_m3(std::int64_t d, const Registry& reg) {
    require_degree(d, "theorem_m3");
    const Rational s1 = sigma1(d), s3 = sigma3(d), s5 = sigma5(d), x(d), x2 = x * x;
    return ChowClass::from_map(
        reg, SpaceId::M3, 2,
        {{"lambda^2", (-6264 * x2 + 6780 * x - 960) * s1 + (5592 * x - 5400) * s3 + 252 * s5},
         {"lambda*delta_0", (1224 * x2 - 1068 * x + 156) * s1 + (-1152 * x + 840) * s3},
         {"lambda*delta_1", (2160 * x2 - 696 * x + 216) * s1 + (-1920 * x + 240) * s3},
         {"delta_0^2", (-54 * x2 + 39 * x - 6) * s1 + (51 * x - 30) * s3},
         {"delta_0*delta_1", (-216 * x2 + 36 * x - 12) * s1 + (192 * x) * s3},
         {"delta_1^2", (-216 * x2 - 132 * x + 36) * s1 + (192 * x + 120) * s3},
         {"kappa_2", (216 * x2 - 444 * x + 60) * s1 + (-192 * x + 360) * s3}},
        Basis::q_class);
}

ChowClass class_m3(std::int64_t d, const Registry& reg) {
    const auto solved = chow::to_q_class_basis(reg, chow::solve_class(reg, SpaceId::M3, 2, assemble_m3_profile(d, reg)));
    require_equal("class_m3", d, reg, solved, theorem_m3(d, reg));
    return solved;
}

// ---------------------------------------------------------------------------
// Appendix contributions

Rational appendix_typeA_closed(std::int64_t d) {
    require_degree(d, "appendix_typeA");
    const Rational dd(d);
    return (dd / 6 + Rational(1, 3)) * sigma1(d) - dd * Rational(arith::tau(d)) / 2;
}

Rational appendix_typeA(std::int64_t d) {
    require_degree(d, "appendix_typeA");
    const Rational direct = over_factorizations(d, [](std::int64_t a, std::int64_t m) {
        return Rational((a - 1) * (a - 2), 6) * Rational(m);
    });
    require_equal("appendix_typeA", d, direct, appendix_typeA_closed(d));
    return direct;
}

Rational appendix_typeB_closed(std::int64_t d) {
    require_degree(d, "appendix_typeB_extra");
    const Rational dd(d);
    return conv2z(d) - dd * sigma1(d) / 2 + dd * Rational(arith::tau(d)) / 2;
}

Rational appendix_typeB_extra(std::int64_t d) {
    require_degree(d, "appendix_typeB_extra");
    const Rational direct(sum_mb(d, true));
    require_equal("appendix_typeB_extra", d, direct, appendix_typeB_closed(d));
    return direct;
}

CancellationFits appendix_cancellation_series(std::size_t order, unsigned max_weight) {
    auto series = [&](auto f) {
        return QSeries::from_function(order, [&](std::size_t d) {
            return d == 0 ? Rational(0) : f(static_cast<std::int64_t>(d));
        });
    };
    const QSeries a = series(appendix_typeA);
    const QSeries b = series(appendix_typeB_extra);
    const auto basis = qmod::basis(max_weight, order);
    return {qmod::fit_against(a, basis, max_weight, order), qmod::fit_against(b, basis, max_weight, order),
            qmod::fit_against(a + b, basis, max_weight, order)};
}

// ---------------------------------------------------------------------------
// Families

std::string to_string(Family f) {
    switch (f) {
    case Family::m2: return "m2";
    case Family::m2e: return "m2e";
    case Family::m21: return "m21";
    case Family::m3: return "m3";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (auto f : {Family::m2, Family::m2e, Family::m21, Family::m3})
        if (to_string(f) == name) return f;
    throw PreconditionError("unknown class family '" + name + "' (expected m2, m2e, m21 or m3)");
}

ChowClass family_class(Family f, std::int64_t d, const Registry& reg) {
    switch (f) {
    case Family::m2: return class_m2(d, reg);
    case Family::m2e: return class_m2E(d, reg);
    case Family::m21: return class_m21(d, reg);
    case Family::m3: return class_m3(d, reg);
    }
    throw PreconditionError("unknown family");
}

namespace {

std::pair<SpaceId, int> family_group(Family f) {
    switch (f) {
    case Family::m2: return {SpaceId::M2, 1};
    case Family::m2e: return {SpaceId::M2, 2};
    case Family::m21: return {SpaceId::M21, 2};
    case Family::m3: return {SpaceId::M3, 2};
    }
    throw PreconditionError("unknown family");
}

} // namespace

std::vector<std::string> family_labels(Family f, const Registry& reg) {
    const auto [space, degree] = family_group(f);
    return ChowClass::zero(reg, space, degree, Basis::q_class).labels(reg);
}

QSeries coefficient_series(Family f, const std::string& label, std::size_t order, const Registry& reg) {
    const auto labels = family_labels(f, reg);
    if (std::find(labels.begin(), labels.end(), label) == labels.end())
        throw PreconditionError("'" + label + "' is not a coefficient of the " + to_string(f) + " class");
    return QSeries::from_function(order, [&](std::size_t d) {
        return d == 0 ? Rational(0) : family_class(f, static_cast<std::int64_t>(d), reg).coeff(reg, label);
    });
}

std::vector<CertifiedSeries> qmod_certify_all(std::size_t order, unsigned max_weight, const Registry& reg) {
    const auto basis = qmod::basis(max_weight, order);
    if (order <= basis.size())
        throw PreconditionError("qmod_certify_all: order " + std::to_string(order) + " must exceed the basis size " +
                                std::to_string(basis.size()));
    std::vector<CertifiedSeries> out;
    for (auto f : {Family::m2, Family::m2e, Family::m21, Family::m3}) {
        const auto labels = family_labels(f, reg);
        std::vector<std::vector<Rational>> coeffs(labels.size(), std::vector<Rational>(order + 1));
        for (std::size_t d = 1; d <= order; ++d) {
            const auto c = family_class(f, static_cast<std::int64_t>(d), reg);
            for (std::size_t i = 0; i < labels.size(); ++i) coeffs[i][d] = c.coeffs[i];
        }
        for (std::size_t i = 0; i < labels.size(); ++i) {
            QSeries s(std::move(coeffs[i]));
            auto fit = qmod::fit_against(s, basis, max_weight, order);
            out.push_back({f, labels[i], std::move(s), std::move(fit)});
        }
    }
    return out;
}

} // namespace delliptic::loci
