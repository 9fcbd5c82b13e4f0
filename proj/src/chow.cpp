#include "delliptic/chow.hpp"

#include <algorithm>
#include <sstream>

#include "delliptic/errors.hpp"
#include "delliptic/linalg.hpp"

namespace delliptic::chow {

std::string to_string(SpaceId id) {
    switch (id) {
    case SpaceId::M11: return "M11";
    case SpaceId::M12: return "M12";
    case SpaceId::M13: return "M13";
    case SpaceId::M2: return "M2";
    case SpaceId::M21: return "M21";
    case SpaceId::M3: return "M3";
    }
    return "?";
}

SpaceId parse_space(const std::string& name) {
    for (auto id : {SpaceId::M11, SpaceId::M12, SpaceId::M13, SpaceId::M2, SpaceId::M21, SpaceId::M3})
        if (to_string(id) == name) return id;
    throw PreconditionError("unknown space '" + name + "'");
}

// ---------------------------------------------------------------------------
// ChowSpace

namespace {

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

ChowSpace::ChowSpace(SpaceId id, int dimension)
    : id_(id), dimension_(dimension), labels_(static_cast<std::size_t>(dimension) + 1),
      complete_(static_cast<std::size_t>(dimension) + 1, false) {}

void ChowSpace::add_labels(int codim, std::vector<std::string> labels, bool complete) {
    if (codim < 0 || codim > dimension_) throw PreconditionError("codimension out of range");
    for (const auto& l : labels) {
        if (codim_.count(l)) throw PreconditionError("duplicate label " + l);
        codim_[l] = codim;
    }
    auto& slot = labels_[static_cast<std::size_t>(codim)];
    slot.insert(slot.end(), labels.begin(), labels.end());
    complete_[static_cast<std::size_t>(codim)] = complete;
}

void ChowSpace::set_pairing(const std::string& a, const std::string& b, const Rational& value) {
    if (codim_of(a) + codim_of(b) != dimension_)
        throw PreconditionError("pairing " + a + " * " + b + " is not between complementary codimensions");
    pairings_[key(a, b)] = value;
}

void ChowSpace::set_q_class(const std::string& label, std::string q_label, const Rational& aut_order) {
    codim_of(label);
    q_class_[label] = {std::move(q_label), aut_order};
}

const std::vector<std::string>& ChowSpace::labels(int codim) const {
    if (codim < 0 || codim > dimension_)
        throw PreconditionError(to_string(id_) + " has no codimension " + std::to_string(codim));
    return labels_[static_cast<std::size_t>(codim)];
}

bool ChowSpace::complete(int codim) const {
    return codim >= 0 && codim <= dimension_ && complete_[static_cast<std::size_t>(codim)];
}

bool ChowSpace::has_label(const std::string& label) const { return codim_.count(label) != 0; }

int ChowSpace::codim_of(const std::string& label) const {
    auto it = codim_.find(label);
    if (it == codim_.end()) throw PreconditionError(to_string(id_) + " has no class labelled '" + label + "'");
    return it->second;
}

std::optional<Rational> ChowSpace::stored_pairing(const std::string& a, const std::string& b) const {
    auto it = pairings_.find(key(a, b));
    if (it == pairings_.end()) return std::nullopt;
    return it->second;
}

Rational ChowSpace::pair(const std::string& a, const std::string& b) const {
    if (codim_of(a) + codim_of(b) != dimension_)
        throw PreconditionError("cannot pair " + a + " with " + b + " on " + to_string(id_) +
                                ": codimensions are not complementary");
    if (auto v = stored_pairing(a, b)) return *v;
    throw UnlistedIntersection("intersection number " + a + " * " + b + " on " + to_string(id_) +
                               " is not registered");
}

Rational ChowSpace::pair_or_zero(const std::string& a, const std::string& b) const {
    if (codim_of(a) + codim_of(b) != dimension_) return Rational(0);
    return pair(a, b);
}

std::optional<Rational> ChowSpace::aut_order(const std::string& label) const {
    auto it = q_class_.find(label);
    if (it == q_class_.end()) return std::nullopt;
    return it->second.second;
}

std::optional<std::string> ChowSpace::q_label(const std::string& label) const {
    auto it = q_class_.find(label);
    if (it == q_class_.end()) return std::nullopt;
    return it->second.first;
}

// ---------------------------------------------------------------------------
// Registry

const ChowSpace& Registry::space(SpaceId id) const {
    auto it = spaces_.find(id);
    if (it == spaces_.end()) throw PreconditionError("space " + to_string(id) + " is not registered");
    return it->second;
}

ChowSpace& Registry::mutable_space(SpaceId id) {
    auto it = spaces_.find(id);
    if (it == spaces_.end()) throw PreconditionError("space " + to_string(id) + " is not registered");
    return it->second;
}

// ---------------------------------------------------------------------------
// ChowClass

namespace {

std::vector<std::string> shown_labels(const Registry& reg, SpaceId space, int degree, Basis basis) {
    const auto& sp = reg.space(space);
    auto labels = sp.labels(degree);
    if (basis == Basis::q_class) {
        for (auto& l : labels) {
            auto q = sp.q_label(l);
            if (!q) throw PreconditionError("no Q-class registered for " + l + " on " + to_string(space));
            l = *q;
        }
    }
    return labels;
}

void require_same_shape(const ChowClass& a, const ChowClass& b) {
    if (a.space != b.space || a.degree != b.degree || a.basis != b.basis || a.coeffs.size() != b.coeffs.size())
        throw PreconditionError("classes live in different groups");
}

} // namespace

ChowClass ChowClass::zero(const Registry& reg, SpaceId space, int degree, Basis basis) {
    const auto n = reg.space(space).labels(degree).size();
    return ChowClass{space, degree, basis, std::vector<Rational>(n)};
}

ChowClass ChowClass::from_map(const Registry& reg, SpaceId space, int degree,
                              const std::map<std::string, Rational>& coeffs, Basis basis) {
    auto c = zero(reg, space, degree, basis);
    const auto labels = shown_labels(reg, space, degree, basis);
    for (const auto& [label, value] : coeffs) {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end())
            throw PreconditionError("'" + label + "' is not a degree-" + std::to_string(degree) + " label of " +
                                    to_string(space));
        c.coeffs[static_cast<std::size_t>(it - labels.begin())] = value;
    }
    return c;
}

std::vector<std::string> ChowClass::labels(const Registry& reg) const {
    return shown_labels(reg, space, degree, basis);
}

Rational ChowClass::coeff(const Registry& reg, const std::string& label) const {
    const auto ls = labels(reg);
    auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) throw PreconditionError("'" + label + "' is not a label of this class");
    return coeffs[static_cast<std::size_t>(it - ls.begin())];
}

bool ChowClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.is_zero(); });
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& c) {
    for (auto& x : coeffs) x *= c;
    return *this;
}

std::string ChowClass::str(const Registry& reg) const {
    const auto ls = labels(reg);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto& c = coeffs[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag == Rational(1)) os << ls[i];
        else os << mag.str() << '*' << ls[i];
        first = false;
    }
    return first ? "0" : os.str();
}

Rational IntersectionProfile::at(const std::string& label) const {
    auto it = values.find(label);
    if (it == values.end()) throw PreconditionError("profile has no entry for " + label);
    return it->second;
}

// ---------------------------------------------------------------------------
// Operations

Rational pairing(const Registry& reg, const ChowClass& a, const ChowClass& b) {
    if (a.space != b.space) throw PreconditionError("pairing classes on different spaces");
    const auto& sp = reg.space(a.space);
    if (a.degree + b.degree != sp.dimension())
        throw PreconditionError("pairing needs complementary degrees, got " + std::to_string(a.degree) + " and " +
                                std::to_string(b.degree) + " on " + to_string(a.space));
    const auto pa = to_pushforward_basis(reg, a), pb = to_pushforward_basis(reg, b);
    const auto& la = sp.labels(a.degree);
    const auto& lb = sp.labels(b.degree);
    Rational total;
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (pa.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < lb.size(); ++j) {
            if (pb.coeffs[j].is_zero()) continue;
            total += pa.coeffs[i] * pb.coeffs[j] * sp.pair(la[i], lb[j]);
        }
    }
    return total;
}

ChowClass solve_class(const Registry& reg, SpaceId space, int degree, const IntersectionProfile& profile) {
    if (profile.space != space) throw PreconditionError("profile belongs to a different space");
    const auto& sp = reg.space(space);
    if (!sp.complete(degree))
        throw PreconditionError("no complete basis registered for degree " + std::to_string(degree) + " of " +
                                to_string(space));
    const int dual = sp.dimension() - degree;
    const auto& basis = sp.labels(degree);

    std::vector<std::string> rows;
    for (const auto& [label, value] : profile.values) {
        if (sp.codim_of(label) != dual)
            throw PreconditionError("profile label " + label + " is not in the dual degree " + std::to_string(dual));
        rows.push_back(label);
    }
    if (rows.size() < basis.size())
        throw SingularSystem("profile has " + std::to_string(rows.size()) + " entries for a " +
                             std::to_string(basis.size()) + "-dimensional group");

    linalg::Matrix a(rows.size(), basis.size());
    std::vector<Rational> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) a(r, c) = sp.pair(basis[c], rows[r]);
        rhs[r] = profile.values.at(rows[r]);
    }
    return ChowClass{space, degree, Basis::pushforward, linalg::solve(a, rhs)};
}

ChowClass to_q_class_basis(const Registry& reg, const ChowClass& c) {
    if (c.basis == Basis::q_class) return c;
    const auto& sp = reg.space(c.space);
    const auto& labels = sp.labels(c.degree);
    ChowClass out{c.space, c.degree, Basis::q_class, c.coeffs};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto aut = sp.aut_order(labels[i]);
        if (!aut) throw PreconditionError("no Q-class conversion factor registered for " + labels[i]);
        out.coeffs[i] *= *aut;
    }
    return out;
}

ChowClass to_pushforward_basis(const Registry& reg, const ChowClass& c) {
    if (c.basis == Basis::pushforward) return c;
    const auto& sp = reg.space(c.space);
    const auto& labels = sp.labels(c.degree);
    ChowClass out{c.space, c.degree, Basis::pushforward, c.coeffs};
    for (std::size_t i = 0; i < labels.size(); ++i) out.coeffs[i] /= *sp.aut_order(labels[i]);
    return out;
}

ChowClass pushforward_m21_to_m2(const Registry& reg, const ChowClass& c) {
    if (c.space != SpaceId::M21 || c.degree != 2)
        throw PreconditionError("pushforward_m21_to_m2 expects a degree-2 class on M21");
    const auto q = to_q_class_basis(reg, c);
    return ChowClass::from_map(reg, SpaceId::M2, 1,
                               {{"delta_0", q.coeff(reg, "xi_1")}, {"delta_1", q.coeff(reg, "delta_11")}},
                               Basis::q_class);
}

} // namespace delliptic::chow
