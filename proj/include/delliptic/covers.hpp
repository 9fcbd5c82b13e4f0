#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "delliptic/rational.hpp"

namespace delliptic::covers {

/// Ramification profile / cycle type: non-increasing positive parts.
class Partition {
public:
    /// Sorts the parts; throws PreconditionError on empty input or a non-positive part.
    explicit Partition(std::vector<int> parts);
    /// Parses a comma-separated list such as "3,1,1".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Bijection of {0..d-1}. Composition is (s * t)(x) = s(t(x)).
class Permutation {
public:
    static Permutation identity(int d);
    /// Throws PreconditionError unless images is a bijection of {0..d-1}.
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    Partition cycle_type() const;
    Permutation inverse() const;
    bool is_identity() const;

    friend Permutation operator*(const Permutation& s, const Permutation& t);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// True if the group generated by the permutations acts transitively on {0..d-1}.
bool transitive(const std::vector<Permutation>& gens, int d);

/// Largest degree accepted by hurwitz_number.
inline constexpr int kHurwitzMaxDegree = 8;

/// Connected Hurwitz number for covers of P^1 with the given branch profiles:
/// #{(s_1..s_k) : type(s_i) = profile_i, s_1 * ... * s_k = id, <s_i> transitive} / d!.
Rational hurwitz_number(int d, const std::vector<Partition>& profiles);

/// Index-d sublattices of Z^2 in Hermite normal form (a,0),(b,c), ac = d, 0 <= b < a.
Integer count_sublattices(std::int64_t d);

/// Sum over the order-d subgroups G of (Z/d)^2 of (|G| - 1), by explicit subgroup enumeration.
Integer count_pointed_isogenies(std::int64_t d);

/// Number of order-d subgroups of (Z/d)^2, by explicit subgroup enumeration.
Integer count_order_d_subgroups(std::int64_t d);

/// Genus-1 degree-d covers of P^1 totally ramified at two marked points and simply
/// ramified at two more: 2(d^2 - 1).
Integer count_dd22(std::int64_t d);

/// Genus-2 degree-d covers of P^1 totally ramified at two points and simply ramified at
/// four: 48(d^4 - 1), checked against the elliptic-tail degeneration count.
Integer count_dd2222_g2(std::int64_t d);

/// The degeneration side of count_dd2222_g2: 12 * dd22(d)^2 + 8 * dd22(2) * dd22(d).
Integer count_dd2222_degeneration(std::int64_t d);

} // namespace delliptic::covers
