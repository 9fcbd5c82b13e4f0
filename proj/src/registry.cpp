// Built-in Chow data. Every label string used anywhere in the library is fixed here.

#include "delliptic/chow.hpp"

namespace delliptic::chow {

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

void fill_rows(ChowSpace& sp, const std::vector<std::string>& rows, const std::vector<std::string>& cols,
               const std::vector<std::vector<Rational>>& table) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sp.set_pairing(rows[i], cols[j], table[i][j]);
}

ChowSpace make_m11() {
    // Only used as a factor of boundary strata: fundamental class and the class of a point.
    ChowSpace sp(SpaceId::M11, 1);
    sp.add_labels(0, {"1"}, true);
    sp.add_labels(1, {"p"}, true);
    sp.set_pairing("1", "p", q(1));
    return sp;
}

ChowSpace make_m12() {
    ChowSpace sp(SpaceId::M12, 2);
    const std::vector<std::string> div{"Delta_0", "Delta_1"};
    sp.add_labels(0, {"1"}, true);
    sp.add_labels(1, div, true);
    sp.add_labels(2, {"p"}, true);
    fill_rows(sp, div, div, {{q(0), q(1)}, {q(1), q(-1, 24)}});
    sp.set_pairing("1", "p", q(1));
    return sp;
}

ChowSpace make_m13() {
    ChowSpace sp(SpaceId::M13, 3);
    const std::vector<std::string> div{"Delta_0", "Delta_1_{1,2,3}", "Delta_1_{2,3}", "Delta_1_{1,3}",
                                       "Delta_1_{1,2}"};
    const std::vector<std::string> curves{"Delta_01_{1,2}", "Delta_01_{1,3}", "Delta_11_{1,2}", "Delta_11_{1,3}"};
    sp.add_labels(1, div, true);
    sp.add_labels(2, curves, false);
    fill_rows(sp, curves, div,
              {{q(0), q(1), q(0), q(0), q(-1)},
               {q(0), q(1), q(0), q(-1), q(0)},
               {q(1), q(-1, 24), q(0), q(0), q(0)},
               {q(1), q(-1, 24), q(0), q(0), q(0)}});
    return sp;
}

ChowSpace make_m2() {
    ChowSpace sp(SpaceId::M2, 3);
    sp.add_labels(1, {"Delta_0", "Delta_1"}, true);
    sp.add_labels(2, {"Delta_00", "Delta_01"}, true);
    fill_rows(sp, {"Delta_00", "Delta_01"}, {"Delta_0", "Delta_1"}, {{q(-4), q(2)}, {q(1), q(-1, 12)}});
    sp.set_q_class("Delta_0", "delta_0", q(2));
    sp.set_q_class("Delta_1", "delta_1", q(2));
    sp.set_q_class("Delta_00", "delta_00", q(8));
    sp.set_q_class("Delta_01", "delta_01", q(2));
    return sp;
}

ChowSpace make_m21() {
    ChowSpace sp(SpaceId::M21, 4);
    const std::vector<std::string> surf{"Delta_00", "Delta_01a", "Delta_01b", "Xi_1", "Delta_11"};
    const std::vector<std::string> gamma{"Gamma_(5)", "Gamma_(6)", "Gamma_(11)"};
    sp.add_labels(1, {"Delta_1"}, false);
    sp.add_labels(2, surf, true);
    sp.add_labels(3, gamma, false);
    fill_rows(sp, surf, surf,
              {{q(0), q(0), q(0), q(-4), q(2)},
               {q(0), q(1), q(-1), q(1), q(0)},
               {q(0), q(-1), q(1), q(0), q(-1, 12)},
               {q(-4), q(1), q(0), q(1, 12), q(0)},
               {q(2), q(0), q(-1, 12), q(0), q(1, 288)}});
    fill_rows(sp, {"Delta_1"}, gamma, {{q(1), q(0), q(-1, 24)}});
    sp.set_q_class("Delta_00", "delta_00", q(8));
    sp.set_q_class("Delta_01a", "delta_01a", q(2));
    sp.set_q_class("Delta_01b", "delta_01b", q(2));
    sp.set_q_class("Xi_1", "xi_1", q(2));
    sp.set_q_class("Delta_11", "delta_11", q(2));
    return sp;
}

ChowSpace make_m3() {
    ChowSpace sp(SpaceId::M3, 6);
    const std::vector<std::string> deg2{"lambda^2",      "lambda*delta_0", "lambda*delta_1", "delta_0^2",
                                        "delta_0*delta_1", "delta_1^2",    "kappa_2"};
    const std::vector<std::string> deg4{"Delta_[1]", "Delta_[4]",  "Delta_[5]", "Delta_[6]",
                                        "Delta_[8]", "Delta_[10]", "Delta_[11]"};
    sp.add_labels(2, deg2, true);
    sp.add_labels(4, deg4, true);
    fill_rows(sp, deg4, deg2,
              {{q(0), q(0), q(0), q(0), q(4), q(-3), q(1)},
               {q(0), q(0), q(0), q(8), q(-4), q(2), q(0)},
               {q(0), q(-1, 12), q(1, 24), q(-2), q(7, 12), q(-1, 12), q(0)},
               {q(0), q(0), q(-1, 24), q(0), q(-1, 2), q(1, 12), q(0)},
               {q(0), q(-1, 12), q(1, 24), q(-11, 6), q(1, 2), q(-1, 24), q(1, 24)},
               {q(0), q(0), q(-1, 24), q(0), q(-1, 2), q(1, 8), q(1, 24)},
               {q(1, 288), q(1, 24), q(-1, 288), q(1, 2), q(-1, 24), q(1, 288), q(0)}});
    // The degree-2 basis is already made of Q-classes.
    for (const auto& l : deg2) sp.set_q_class(l, l, q(1));
    return sp;
}

} // namespace

Registry make_builtin_registry() {
    Registry reg;
    for (auto&& sp : {make_m11(), make_m12(), make_m13(), make_m2(), make_m21(), make_m3()})
        reg.spaces_.emplace(sp.id(), sp);
    return reg;
}

const Registry& Registry::builtin() {
    static const Registry reg = make_builtin_registry();
    return reg;
}

} // namespace delliptic::chow
