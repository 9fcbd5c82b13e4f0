#include "delliptic/covers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "delliptic/errors.hpp"

namespace delliptic::covers {

// ---------------------------------------------------------------------------
// Partition / Permutation

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw PreconditionError("partition must have at least one part");
    for (int p : parts_)
        if (p <= 0) throw PreconditionError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
            throw PreconditionError("malformed partition: '" + std::string(text) + "'");
        parts.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

Permutation Permutation::identity(int d) {
    std::vector<int> im(static_cast<std::size_t>(d));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw PreconditionError("images do not form a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> parts;
    for (int s = 0; s < degree(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        parts.push_back(len);
    }
    if (parts.empty()) parts.push_back(0); // degree 0 never reaches here in practice
    return Partition(std::move(parts));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < degree(); ++x) inv[static_cast<std::size_t>((*this)(x))] = x;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree()) throw PreconditionError("composing permutations of different degrees");
    std::vector<int> im(s.images_.size());
    for (int x = 0; x < s.degree(); ++x) im[static_cast<std::size_t>(x)] = s(t(x));
    return Permutation(std::move(im));
}

bool transitive(const std::vector<Permutation>& gens, int d) {
    if (d <= 0) return false;
    std::vector<bool> reached(static_cast<std::size_t>(d), false);
    std::vector<int> stack{0};
    reached[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            int y = g(x);
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = true;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == d;
}

// ---------------------------------------------------------------------------
// Hurwitz numbers

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Size of the conjugacy class of cycle type p in S_d: d! / prod_i i^{m_i} m_i!.
Integer class_size(const Partition& p) {
    Integer z = 1;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int mult = static_cast<int>(j - i);
        for (int k = 0; k < mult; ++k) z *= parts[i];
        z *= factorial(mult);
        i = j;
    }
    return factorial(p.size()) / z;
}

Permutation representative(const Partition& p) {
    std::vector<int> im(static_cast<std::size_t>(p.size()));
    int start = 0;
    for (int len : p.parts()) {
        for (int i = 0; i < len; ++i) im[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return Permutation(std::move(im));
}

std::vector<Permutation> class_elements(const Partition& p) {
    std::vector<int> im(static_cast<std::size_t>(p.size()));
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation s(im);
        if (s.cycle_type() == p) out.push_back(std::move(s));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

} // namespace

Rational hurwitz_number(int d, const std::vector<Partition>& profiles) {
    if (d < 1) throw PreconditionError("hurwitz_number: degree must be >= 1");
    if (d > kHurwitzMaxDegree)
        throw PreconditionError("hurwitz_number: degree " + std::to_string(d) + " exceeds the enumeration budget " +
                                std::to_string(kHurwitzMaxDegree));
    if (profiles.empty()) throw PreconditionError("hurwitz_number: need at least one profile");
    for (const auto& p : profiles)
        if (p.size() != d)
            throw PreconditionError("hurwitz_number: profile " + p.str() + " does not have size " + std::to_string(d));

    // Slot 0 is pinned to one representative; the count is scaled by the class size.
    const Permutation first = representative(profiles.front());
    std::vector<std::vector<Permutation>> free_slots;
    for (std::size_t i = 1; i + 1 < profiles.size(); ++i) free_slots.push_back(class_elements(profiles[i]));

    Integer hits = 0;
    std::vector<Permutation> tuple{first};
    std::function<void(std::size_t, const Permutation&)> recurse = [&](std::size_t slot, const Permutation& prefix) {
        if (slot == free_slots.size()) {
            // The last element is forced: s_k = (s_1 ... s_{k-1})^{-1}.
            if (profiles.size() == 1) {
                if (prefix.is_identity() && transitive(tuple, d)) ++hits;
                return;
            }
            Permutation last = prefix.inverse();
            if (!(last.cycle_type() == profiles.back())) return;
            tuple.push_back(std::move(last));
            if (transitive(tuple, d)) ++hits;
            tuple.pop_back();
            return;
        }
        for (const auto& s : free_slots[slot]) {
            tuple.push_back(s);
            recurse(slot + 1, prefix * s);
            tuple.pop_back();
        }
    };
    recurse(0, first);

    return Rational(hits * class_size(profiles.front()), factorial(d));
}

// ---------------------------------------------------------------------------
// Lattice and subgroup counts

Integer count_sublattices(std::int64_t d) {
    if (d < 1) throw PreconditionError("count_sublattices: d must be >= 1");
    Integer n = 0;
    for (std::int64_t a = 1; a <= d; ++a) {
        if (d % a != 0) continue;
        for (std::int64_t b = 0; b < a; ++b) ++n; // c = d / a is forced
    }
    return n;
}

namespace {

using Subgroup = std::vector<std::uint8_t>; // membership mask over (Z/d)^2, element x*d+y

std::set<Subgroup> subgroups_of_square(std::int64_t d) {
    const auto n = static_cast<std::size_t>(d * d);
    std::set<Subgroup> cyclic;
    for (std::int64_t x = 0; x < d; ++x) {
        for (std::int64_t y = 0; y < d; ++y) {
            Subgroup s(n, 0);
            std::int64_t px = 0, py = 0;
            do {
                s[static_cast<std::size_t>(px * d + py)] = 1;
                px = (px + x) % d;
                py = (py + y) % d;
            } while (px != 0 || py != 0);
            cyclic.insert(std::move(s));
        }
    }
    // (Z/d)^2 has rank 2, so every subgroup is a sum of two cyclic ones.
    std::vector<std::vector<std::size_t>> elems;
    for (const auto& c : cyclic) {
        std::vector<std::size_t> e;
        for (std::size_t i = 0; i < n; ++i)
            if (c[i]) e.push_back(i);
        elems.push_back(std::move(e));
    }
    std::set<Subgroup> all;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            Subgroup s(n, 0);
            for (auto u : elems[i]) {
                const auto ux = static_cast<std::int64_t>(u) / d, uy = static_cast<std::int64_t>(u) % d;
                for (auto v : elems[j]) {
                    const auto vx = static_cast<std::int64_t>(v) / d, vy = static_cast<std::int64_t>(v) % d;
                    s[static_cast<std::size_t>(((ux + vx) % d) * d + (uy + vy) % d)] = 1;
                }
            }
            all.insert(std::move(s));
        }
    }
    return all;
}

std::int64_t order_of(const Subgroup& s) { return std::count(s.begin(), s.end(), std::uint8_t{1}); }

} // namespace

Integer count_pointed_isogenies(std::int64_t d) {
    if (d < 1) throw PreconditionError("count_pointed_isogenies: d must be >= 1");
    Integer total = 0;
    for (const auto& g : subgroups_of_square(d))
        if (order_of(g) == d) total += static_cast<long>(d - 1);
    return total;
}

Integer count_order_d_subgroups(std::int64_t d) {
    if (d < 1) throw PreconditionError("count_order_d_subgroups: d must be >= 1");
    Integer total = 0;
    for (const auto& g : subgroups_of_square(d))
        if (order_of(g) == d) ++total;
    return total;
}

Integer count_dd22(std::int64_t d) {
    if (d < 1) throw PreconditionError("count_dd22: d must be >= 1");
    const Integer dd(static_cast<long>(d));
    const Integer formula = 2 * (dd * dd - 1);
    // The second totally ramified point ranges over the nonzero d-torsion points,
    // and the two simple ramification points can be labelled in 2 ways.
    Integer torsion = 0;
    for (std::int64_t x = 0; x < d; ++x)
        for (std::int64_t y = 0; y < d; ++y)
            if (x != 0 || y != 0) ++torsion;
    if (2 * torsion != formula)
        throw CrossCheckFailure("count_dd22", "torsion enumeration disagrees with 2(d^2-1) at d=" + std::to_string(d));
    return formula;
}

Integer count_dd2222_degeneration(std::int64_t d) {
    const Integer split = count_dd22(d);
    return 12 * split * split + 8 * count_dd22(2) * split;
}

Integer count_dd2222_g2(std::int64_t d) {
    if (d < 1) throw PreconditionError("count_dd2222_g2: d must be >= 1");
    const Integer dd(static_cast<long>(d));
    const Integer formula = 48 * (dd * dd * dd * dd - 1);
    const Integer degen = count_dd2222_degeneration(d);
    if (degen != formula)
        throw CrossCheckFailure("count_dd2222_g2", "degeneration count " + degen.get_str() + " != 48(d^4-1) = " +
                                                       formula.get_str());
    return formula;
}

} // namespace delliptic::covers
