#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "delliptic/chow.hpp"
#include "delliptic/qmod.hpp"

namespace delliptic::loci {

using chow::ChowClass;
using chow::IntersectionProfile;
using chow::Registry;
using chow::SpaceId;

// ---------------------------------------------------------------------------
// Product cycles on boundary strata such as M12 x M11.

/// coeff * [left] x [right], labels taken from the two factor spaces.
struct Tensor {
    Rational coeff;
    std::string left;
    std::string right;
};

struct ProductClass {
    SpaceId left;
    SpaceId right;
    std::vector<Tensor> terms;

    /// c x [right] for a class c on the left factor (pushforward basis is used).
    static ProductClass of(const Registry& reg, const ChowClass& c, SpaceId right, const std::string& right_label);
    ProductClass& operator+=(const ProductClass& o);
};

/// Kunneth pairing: (A x B).(C x D) = (A.C)(B.D), zero unless both factors pair
/// in complementary codimension.
Rational product_pairing(const Registry& reg, const ProductClass& a, const ProductClass& b);

/// Sum of c_i * f(label_i) for a functional given only by its values on the labels.
Rational apply_functional(const Registry& reg, const IntersectionProfile& f, const ChowClass& c);

/// Pullback of a divisor class along M13 -> M12 forgetting the third point:
/// Delta_0 -> Delta_0, Delta_1 -> Delta_1_{1,2} + Delta_1_{1,2,3}.
ChowClass pullback_forget_third(const Registry& reg, const ChowClass& c);

/// Pushforward along the boundary map s_S : M12 -> M13 with S = {1,2} or {1,3}:
/// Delta_0 -> Delta_01_S, Delta_1 -> Delta_11_S.
ChowClass push_boundary_s(const Registry& reg, const ChowClass& c, const std::string& s);

// ---------------------------------------------------------------------------
// Auxiliary loci.

/// The 2-pointed d-elliptic class on M12, (d-1) sigma_1(d) (Delta_0/24 + Delta_1).
/// Cross-checked against solve_class on aux_profile_m12(d).
ChowClass aux_class_m12(std::int64_t d, const Registry& reg = Registry::builtin());
/// {Delta_0: (d-1) sigma_1(d), Delta_1: 0}.
IntersectionProfile aux_profile_m12(std::int64_t d);
/// Doubly totally ramified genus-1 covers on M13: {Delta_0: 2(a^2-1), Delta_1_S: 0}.
IntersectionProfile aux_profile_dd22_m13(std::int64_t a);
/// Genus-0 (a,b),(a,b),2,2 covers glued to M13: 1 on Delta_1_{2,3} and Delta_1_{1,2,3},
/// 0 elsewhere, for every (a, b).
IntersectionProfile aux_profile_double_ab_m13(std::int64_t a, std::int64_t b);

/// Number of (a, m, b, n) >= 1 with am + bn = d, weighted by mb, by enumeration.
/// With distinct_ab only the tuples with a != b are counted.
Integer sum_mb(std::int64_t d, bool distinct_ab = false);

// ---------------------------------------------------------------------------
// Genus 2.

IntersectionProfile m2_profile_closed(std::int64_t d);
/// Per-type contributions. Delta_00 is realized as Delta_0 on M12; Delta_01 both as
/// Delta_1 on M12 and as p x M11 on M11 x M11, and the two must agree.
IntersectionProfile m2_profile_summed(std::int64_t d, const Registry& reg = Registry::builtin());
/// Both routes, asserted equal.
IntersectionProfile assemble_m2_profile(std::int64_t d, const Registry& reg = Registry::builtin());
ChowClass theorem_m2(std::int64_t d, const Registry& reg = Registry::builtin());
/// Degree-1 class on M2 in (delta_0, delta_1).
ChowClass class_m2(std::int64_t d, const Registry& reg = Registry::builtin());

/// Covers of a fixed general elliptic curve.
IntersectionProfile m2e_profile_closed(std::int64_t d);
IntersectionProfile m2e_profile_summed(std::int64_t d);
IntersectionProfile assemble_m2E_profile(std::int64_t d);
ChowClass theorem_m2E(std::int64_t d, const Registry& reg = Registry::builtin());
/// Degree-2 class on M2 in (delta_00, delta_01).
ChowClass class_m2E(std::int64_t d, const Registry& reg = Registry::builtin());

IntersectionProfile m21_profile_closed(std::int64_t d);
IntersectionProfile m21_profile_summed(std::int64_t d, const Registry& reg = Registry::builtin());
IntersectionProfile assemble_m21_profile(std::int64_t d, const Registry& reg = Registry::builtin());
ChowClass theorem_m21(std::int64_t d, const Registry& reg = Registry::builtin());
/// Degree-2 class on M21 in (delta_00, delta_01a, delta_01b, xi_1, delta_11); its
/// pushforward to M2 is checked against class_m2.
ChowClass class_m21(std::int64_t d, const Registry& reg = Registry::builtin());

// ---------------------------------------------------------------------------
// Genus 3.

enum class ContributionType { D1_D12, D1_D13, D11_D14 };
std::string to_string(ContributionType t);

/// Test surfaces pushed forward from M21 x M11, in table order:
/// Delta_[1], [5], [6], [8], [10], [11]a, [11]b, [7].
const std::vector<std::string>& m3_test_surfaces();

/// Decomposition of a test surface as coeff * A x B on M21 x M11.
ProductClass m3_surface_decomposition(const Registry& reg, const std::string& surface);

/// True where the entry relies on a registered forgetful image u_*(Gamma) rather than on
/// closed-form data (the D1_D12 column of the Gamma surfaces).
bool table_sourced(ContributionType t, const std::string& surface);

/// One entry of the genus-3 contribution table.
Rational contrib_m3(std::int64_t d, ContributionType t, const std::string& surface,
                    const Registry& reg = Registry::builtin());

/// [C x C] . [pi] by summing 48(a^4-1) m over am = d, checked against 48(d sigma_3 - sigma_1).
Integer cxc_intersection(std::int64_t d);

IntersectionProfile m3_profile_closed(std::int64_t d);
/// Row sums of the contribution table plus Delta_[4] = [C x C]/2 - Delta_[1]. Asserts the
/// two Delta_[11] routes agree and that Delta_[7] totals zero.
IntersectionProfile m3_profile_summed(std::int64_t d, const Registry& reg = Registry::builtin());
IntersectionProfile assemble_m3_profile(std::int64_t d, const Registry& reg = Registry::builtin());
ChowClass theorem_m3(std::int64_t d, const Registry& reg = Registry::builtin());
ChowClass class_m3(std::int64_t d, const Registry& reg = Registry::builtin());

// ---------------------------------------------------------------------------
// Two contributions on M22 whose non-quasimodular parts cancel.

/// sum_{am=d} (a-1)(a-2)/6 * m, checked against (d/6 + 1/3) sigma_1 - d tau / 2.
Rational appendix_typeA(std::int64_t d);
Rational appendix_typeA_closed(std::int64_t d);
/// sum over am + bn = d with a != b of mb, checked against conv2 - d sigma_1 / 2 + d tau / 2.
Rational appendix_typeB_extra(std::int64_t d);
Rational appendix_typeB_closed(std::int64_t d);

struct CancellationFits {
    qmod::FitResult type_a;
    qmod::FitResult type_b;
    qmod::FitResult sum;
};
CancellationFits appendix_cancellation_series(std::size_t order, unsigned max_weight = 6);

// ---------------------------------------------------------------------------
// Generating series of the four class families.

enum class Family { m2, m2e, m21, m3 };
std::string to_string(Family f);
/// Accepts "m2", "m2e", "m21", "m3".
Family parse_family(const std::string& name);

/// The class of the family at degree d, in Q-class basis.
ChowClass family_class(Family f, std::int64_t d, const Registry& reg = Registry::builtin());
/// Q-class labels of the family's basis.
std::vector<std::string> family_labels(Family f, const Registry& reg = Registry::builtin());

/// sum_{d=1}^{order} coeff_label(class(d)) q^d, constant term 0.
QSeries coefficient_series(Family f, const std::string& label, std::size_t order,
                           const Registry& reg = Registry::builtin());

struct CertifiedSeries {
    Family family;
    std::string label;
    QSeries series;
    qmod::FitResult fit;
};

/// Fits every coefficient series of every family at the given weight.
std::vector<CertifiedSeries> qmod_certify_all(std::size_t order, unsigned max_weight = 6,
                                               const Registry& reg = Registry::builtin());

} // namespace delliptic::loci
