#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delliptic/rational.hpp"

namespace delliptic::chow {

/// Moduli spaces with registered Chow data. M11 only carries its point and
/// fundamental class; it is needed to pair cycles on the product boundary strata.
enum class SpaceId { M11, M12, M13, M2, M21, M3 };

std::string to_string(SpaceId id);
/// Accepts the names produced by to_string(); throws PreconditionError otherwise.
SpaceId parse_space(const std::string& name);

/// Which labels a coefficient vector refers to: the upper-case pushforward classes
/// (Delta_0, Xi_1, ...) or the lower-case substack classes (delta_0, xi_1, ...).
enum class Basis { pushforward, q_class };

/// Graded classes of one moduli space together with the intersection numbers the
/// registry knows about.
///
/// Labels are grouped by codimension. A codimension whose label list is not a full basis
/// (M13 curves, the M21 divisor and curve classes) is marked incomplete; classes can still
/// be written against its labels but solve_class refuses to target it.
class ChowSpace {
public:
    ChowSpace(SpaceId id, int dimension);

    SpaceId id() const { return id_; }
    int dimension() const { return dimension_; }

    void add_labels(int codim, std::vector<std::string> labels, bool complete);
    /// Stores a*b = value. The pair must sit in complementary codimensions.
    void set_pairing(const std::string& a, const std::string& b, const Rational& value);
    /// Registers the stable-graph automorphism order relating label to its Q-class.
    void set_q_class(const std::string& label, std::string q_label, const Rational& aut_order);

    const std::vector<std::string>& labels(int codim) const;
    bool complete(int codim) const;
    bool has_label(const std::string& label) const;
    /// Codimension of a registered label; throws PreconditionError for unknown labels.
    int codim_of(const std::string& label) const;

    /// a*b for labels in complementary codimensions; UnlistedIntersection if not stored.
    Rational pair(const std::string& a, const std::string& b) const;
    /// Like pair() but 0 when the codimensions do not add up to the dimension.
    Rational pair_or_zero(const std::string& a, const std::string& b) const;
    std::optional<Rational> stored_pairing(const std::string& a, const std::string& b) const;

    std::optional<Rational> aut_order(const std::string& label) const;
    std::optional<std::string> q_label(const std::string& label) const;

private:
    SpaceId id_;
    int dimension_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<bool> complete_;
    std::map<std::string, int> codim_;
    std::map<std::pair<std::string, std::string>, Rational> pairings_;
    std::map<std::string, std::pair<std::string, Rational>> q_class_;
};

/// Immutable-by-default collection of the registered spaces. Copies can be edited,
/// which is how verification runs against a deliberately corrupted table.
class Registry {
public:
    static const Registry& builtin();

    const ChowSpace& space(SpaceId id) const;
    ChowSpace& mutable_space(SpaceId id);

private:
    Registry() = default;
    std::map<SpaceId, ChowSpace> spaces_;
    friend Registry make_builtin_registry();
};

/// Exact coefficient vector against the labels of one codimension of one space.
struct ChowClass {
    SpaceId space;
    int degree;
    Basis basis = Basis::pushforward;
    std::vector<Rational> coeffs;

    static ChowClass zero(const Registry& reg, SpaceId space, int degree, Basis basis = Basis::pushforward);
    /// Throws if a label is not part of the given codimension.
    static ChowClass from_map(const Registry& reg, SpaceId space, int degree,
                              const std::map<std::string, Rational>& coeffs, Basis basis = Basis::pushforward);

    /// Labels matching coeffs, in the class's basis.
    std::vector<std::string> labels(const Registry& reg) const;
    Rational coeff(const Registry& reg, const std::string& label) const;
    bool is_zero() const;

    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator*=(const Rational& c);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator*(const Rational& c, ChowClass a) { return a *= c; }
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    /// "6*delta_0 + 24*delta_1", or "0".
    std::string str(const Registry& reg) const;
};

/// Dual-label -> intersection number data that determines a class.
struct IntersectionProfile {
    SpaceId space;
    std::map<std::string, Rational> values;

    Rational at(const std::string& label) const;
    friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;
};

/// Bilinear extension of the stored table. Degrees must be complementary.
Rational pairing(const Registry& reg, const ChowClass& a, const ChowClass& b);

/// The unique class of the given degree whose pairings with the profile's labels match.
///
/// Every profile label must live in the complementary codimension. Throws
/// UnlistedIntersection if the system needs an unstored number, SingularSystem if the
/// profile does not pin the class down, InconsistentSystem if no class fits.
ChowClass solve_class(const Registry& reg, SpaceId space, int degree, const IntersectionProfile& profile);

/// Rescales pushforward coefficients to Q-class coefficients (delta = Delta/|Aut|, so
/// coefficients multiply by |Aut|). Identity in q_class basis already.
ChowClass to_q_class_basis(const Registry& reg, const ChowClass& c);
/// Inverse of to_q_class_basis.
ChowClass to_pushforward_basis(const Registry& reg, const ChowClass& c);

/// Forgetful pushforward A^2(M21) -> A^1(M2): delta_00, delta_01a, delta_01b -> 0,
/// xi_1 -> delta_0, delta_11 -> delta_1. Result is in Q-class basis.
ChowClass pushforward_m21_to_m2(const Registry& reg, const ChowClass& c);

} // namespace delliptic::chow
