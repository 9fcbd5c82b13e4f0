#include "delliptic/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "delliptic/arith.hpp"
#include "delliptic/covers.hpp"
#include "delliptic/errors.hpp"
#include "delliptic/loci.hpp"
#include "delliptic/qmod.hpp"

namespace delliptic::verify {

using json_io::Json;
using chow::Registry;
using chow::SpaceId;

namespace {

// Reference copy of the pairing tables, typed in separately from registry.cpp.
// Row format: SPACE ROW | COL... : VALUE...
constexpr const char* kReferenceTables = R"(
M11 1 | p : 1
M12 1 | p : 1
M12 Delta_0 | Delta_0 Delta_1 : 0 1
M12 Delta_1 | Delta_0 Delta_1 : 1 -1/24
M13 Delta_01_{1,2} | Delta_0 Delta_1_{1,2,3} Delta_1_{2,3} Delta_1_{1,3} Delta_1_{1,2} : 0 1 0 0 -1
M13 Delta_01_{1,3} | Delta_0 Delta_1_{1,2,3} Delta_1_{2,3} Delta_1_{1,3} Delta_1_{1,2} : 0 1 0 -1 0
M13 Delta_11_{1,2} | Delta_0 Delta_1_{1,2,3} Delta_1_{2,3} Delta_1_{1,3} Delta_1_{1,2} : 1 -1/24 0 0 0
M13 Delta_11_{1,3} | Delta_0 Delta_1_{1,2,3} Delta_1_{2,3} Delta_1_{1,3} Delta_1_{1,2} : 1 -1/24 0 0 0
M2 Delta_00 | Delta_0 Delta_1 : -4 2
M2 Delta_01 | Delta_0 Delta_1 : 1 -1/12
M21 Delta_00 | Delta_00 Delta_01a Delta_01b Xi_1 Delta_11 : 0 0 0 -4 2
M21 Delta_01a | Delta_00 Delta_01a Delta_01b Xi_1 Delta_11 : 0 1 -1 1 0
M21 Delta_01b | Delta_00 Delta_01a Delta_01b Xi_1 Delta_11 : 0 -1 1 0 -1/12
M21 Xi_1 | Delta_00 Delta_01a Delta_01b Xi_1 Delta_11 : -4 1 0 1/12 0
M21 Delta_11 | Delta_00 Delta_01a Delta_01b Xi_1 Delta_11 : 2 0 -1/12 0 1/288
M21 Delta_1 | Gamma_(5) Gamma_(6) Gamma_(11) : 1 0 -1/24
M3 Delta_[1] | lambda^2 lambda*delta_0 lambda*delta_1 delta_0^2 delta_0*delta_1 delta_1^2 kappa_2 : 0 0 0 0 4 -3 1
M3 Delta_[4] | lambda^2 lambda*delta_0 lambda*delta_1 delta_0^2 delta_0*delta_1 delta_1^2 kappa_2 : 0 0 0 8 -4 2 0
M3 Delta_[5] | lambda^2 lambda*delta_0 lambda*delta_1 delta_0^2 delta_0*delta_1 delta_1^2 kappa_2 : 0 -1/12 1/24 -2 7/12 -1/12 0
M3 Delta_[6] | lambda^2 lambda*delta_0 lambda*delta_1 delta_0^2 delta_0*delta_1 delta_1^2 kappa_2 : 0 0 -1/24 0 -1/2 1/12 0
M3 Delta_[8] | lambda^2 lambda*delta_0 lambda*delta_1 delta_0^2 delta_0*delta_1 delta_1^2 kappa_2 : 0 -1/12 1/24 -11/6 1/2 -1/24 1/24
M3 Delta_[10] | lambda^2 lambda*delta_0 lambda*delta_1 delta_0^2 delta_0*delta_1 delta_1^2 kappa_2 : 0 0 -1/24 0 -1/2 1/8 1/24
M3 Delta_[11] | lambda^2 lambda*delta_0 lambda*delta_1 delta_0^2 delta_0*delta_1 delta_1^2 kappa_2 : 1/288 1/24 -1/288 1/2 -1/24 1/288 0
)";

constexpr SpaceId kSpaces[] = {SpaceId::M11, SpaceId::M12, SpaceId::M13, SpaceId::M2, SpaceId::M21, SpaceId::M3};

using PairKey = std::tuple<SpaceId, std::string, std::string>;

PairKey make_key(SpaceId s, const std::string& a, const std::string& b) {
    return a < b ? PairKey{s, a, b} : PairKey{s, b, a};
}

const std::map<PairKey, Rational>& reference_tables() {
    static const std::map<PairKey, Rational> table = [] {
        std::map<PairKey, Rational> out;
        std::istringstream in(kReferenceTables);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream row(line);
            std::string space, label, tok;
            row >> space >> label >> tok;
            std::vector<std::string> cols;
            while (row >> tok && tok != ":") cols.push_back(tok);
            const SpaceId id = chow::parse_space(space);
            for (const auto& c : cols) {
                row >> tok;
                const Rational v = Rational::parse(tok);
                auto [it, fresh] = out.emplace(make_key(id, label, c), v);
                if (!fresh && it->second != v) throw Error("reference table is not symmetric at " + label + "*" + c);
            }
        }
        return out;
    }();
    return table;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string item(std::string_view what, std::int64_t d) { return std::string(what) + " at d=" + std::to_string(d); }

// Runs body, turning any library error into a failed check.
class Runner {
public:
    explicit Runner(Report& r) : report_(r) {}

    void run(const std::string& name, const std::function<void(std::vector<std::string>&)>& body) {
        Check c{name, true, ""};
        std::vector<std::string> failures;
        try {
            body(failures);
        } catch (const std::exception& e) {
            failures.emplace_back(e.what());
        }
        if (!failures.empty()) {
            c.ok = false;
            c.detail = failures.front();
            if (failures.size() > 1) c.detail += " (+" + std::to_string(failures.size() - 1) + " more)";
            if (!report_.first_failure) report_.first_failure = name;
            report_.ok = false;
        }
        report_.checks.push_back(std::move(c));
    }

private:
    Report& report_;
};

Json class_entry(const Registry& reg, std::int64_t d, const chow::IntersectionProfile& profile,
                 const chow::ChowClass& solved, const chow::ChowClass& theorem) {
    return Json{{"d", d},
                {"profile", json_io::to_json(profile)},
                {"solved", json_io::to_json(reg, solved)},
                {"theorem", json_io::to_json(reg, theorem)},
                {"agree", solved == theorem}};
}

} // namespace

chow::Registry inject_pairing(const Registry& reg, const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 4)
        throw PreconditionError("--inject-pairing expects SPACE:A:B:VALUE, got '" + spec + "'");
    Registry copy = reg;
    auto& sp = copy.mutable_space(chow::parse_space(parts[0]));
    sp.set_pairing(parts[1], parts[2], Rational::parse(parts[3]));
    return copy;
}

std::vector<std::string> pairing_table_mismatches(const Registry& reg) {
    const auto& ref = reference_tables();
    std::vector<std::string> out;
    for (auto id : kSpaces) {
        const auto& sp = reg.space(id);
        const int dim = sp.dimension();
        for (int k = 0; 2 * k <= dim; ++k) {
            const auto& rows = sp.labels(k);
            const auto& cols = sp.labels(dim - k);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t j = (2 * k == dim ? i : 0); j < cols.size(); ++j) {
                    const auto stored = sp.stored_pairing(rows[i], cols[j]);
                    auto it = ref.find(make_key(id, rows[i], cols[j]));
                    const std::string where = chow::to_string(id) + " " + rows[i] + "*" + cols[j];
                    if (it == ref.end()) {
                        if (stored) out.push_back(where + " = " + stored->str() + " is not in the reference tables");
                    } else if (!stored) {
                        out.push_back(where + " is missing (reference " + it->second.str() + ")");
                    } else if (*stored != it->second) {
                        out.push_back(where + " = " + stored->str() + ", reference " + it->second.str());
                    }
                }
            }
        }
    }
    // Reference entries whose labels the registry does not know at all.
    for (const auto& [key, value] : ref) {
        const auto& [id, a, b] = key;
        const auto& sp = reg.space(id);
        if (!sp.has_label(a) || !sp.has_label(b))
            out.push_back(chow::to_string(id) + " " + a + "*" + b + " refers to an unregistered label");
    }
    return out;
}

Report run(const Options& opts) {
    if (opts.max_d < 1) throw PreconditionError("--max-d must be >= 1");
    const std::size_t basis_size = qmod::monomials(opts.weight).size();
    if (opts.order <= basis_size)
        throw PreconditionError("--N " + std::to_string(opts.order) + " must exceed the weight-" +
                                std::to_string(opts.weight) + " basis size " + std::to_string(basis_size));

    Registry reg = Registry::builtin();
    for (const auto& spec : opts.inject_pairings) reg = inject_pairing(reg, spec);

    Report report;
    Runner runner(report);
    Json classes = Json::object();
    Json series = Json::array();
    Json appendix = Json::object();

    runner.run("pairing_tables", [&](auto& fail) {
        for (auto& m : pairing_table_mismatches(reg)) fail.push_back(std::move(m));
    });

    runner.run("convolutions", [&](auto& fail) {
        for (std::int64_t d = 1; d <= 200; ++d) {
            // Each call compares the direct sum with the closed form and throws on mismatch.
            if (d >= 2) {
                arith::conv2(d);
                arith::conv2_weighted(d);
            }
            if (d >= 3) arith::conv3(d);
            Integer s = 0;
            for (auto a : arith::divisors(d)) s += 2 * (Integer(static_cast<long>(a * a)) - 1) * static_cast<long>(d / a);
            if (s != 2 * (d - 1) * arith::sigma(1, d)) fail.push_back(item("sum 2(a^2-1)m = 2(d-1)sigma_1", d));
        }
    });

    runner.run("ramanujan", [&](auto& fail) {
        const auto n = opts.order;
        const QSeries e2 = qmod::eisenstein(2, n), e4 = qmod::eisenstein(4, n), e6 = qmod::eisenstein(6, n);
        if (q_derivative(e2) != (e2 * e2 - e4) * Rational(1, 12)) fail.emplace_back("q dE2/dq != (E2^2 - E4)/12");
        if (q_derivative(e4) != (e2 * e4 - e6) * Rational(1, 3)) fail.emplace_back("q dE4/dq != (E2 E4 - E6)/3");
        if (q_derivative(e6) != (e2 * e6 - e4 * e4) * Rational(1, 2)) fail.emplace_back("q dE6/dq != (E2 E6 - E4^2)/2");
    });

    runner.run("hurwitz", [&](auto& fail) {
        using covers::Partition;
        for (int d = 3; d <= 7; ++d) {
            std::vector<int> three(static_cast<std::size_t>(d - 2), 1);
            three[0] = 3;
            const auto h = covers::hurwitz_number(d, {Partition({d}), Partition({d}), Partition(three)});
            if (h != Rational((d - 1) * (d - 2), 6)) fail.push_back("(d),(d),(3,1..) at d=" + std::to_string(d) + " gave " + h.str());
        }
        for (int a = 1; a <= 6; ++a) {
            for (int b = 1; a + b <= 7; ++b) {
                // a = b = 1 has degree 2, where no 3-cycle exists.
                if (a == b && (a == 1 || a > 3)) continue;
                const int d = a + b;
                std::vector<int> three(static_cast<std::size_t>(d - 2), 1);
                three[0] = 3;
                const auto h = covers::hurwitz_number(d, {Partition({a, b}), Partition({a, b}), Partition(three)});
                const Rational want = a == b ? Rational(0) : Rational(1);
                if (h != want)
                    fail.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ") gave " + h.str());
            }
        }
    });

    runner.run("counting", [&](auto& fail) {
        for (std::int64_t d = 1; d <= 50; ++d)
            if (covers::count_sublattices(d) != arith::sigma(1, d)) fail.push_back(item("count_sublattices", d));
        for (std::int64_t d = 1; d <= 30; ++d)
            if (covers::count_pointed_isogenies(d) != (d - 1) * arith::sigma(1, d))
                fail.push_back(item("count_pointed_isogenies", d));
        for (std::int64_t d = 1; d <= 20; ++d) {
            if (covers::count_dd2222_degeneration(d) != covers::count_dd2222_g2(d))
                fail.push_back(item("dd2222 degeneration identity", d));
            loci::cxc_intersection(d);
        }
    });

    struct FamilyRun {
        loci::Family family;
        std::function<chow::IntersectionProfile(std::int64_t)> profile;
        SpaceId space;
        int degree;
        std::function<chow::ChowClass(std::int64_t)> theorem;
    };
    const std::vector<FamilyRun> families{
        {loci::Family::m2, [&](std::int64_t d) { return loci::assemble_m2_profile(d, reg); }, SpaceId::M2, 1,
         [&](std::int64_t d) { return loci::theorem_m2(d, reg); }},
        {loci::Family::m2e, [](std::int64_t d) { return loci::assemble_m2E_profile(d); }, SpaceId::M2, 2,
         [&](std::int64_t d) { return loci::theorem_m2E(d, reg); }},
        {loci::Family::m21, [&](std::int64_t d) { return loci::assemble_m21_profile(d, reg); }, SpaceId::M21, 2,
         [&](std::int64_t d) { return loci::theorem_m21(d, reg); }},
        {loci::Family::m3, [&](std::int64_t d) { return loci::assemble_m3_profile(d, reg); }, SpaceId::M3, 2,
         [&](std::int64_t d) { return loci::theorem_m3(d, reg); }},
    };
    for (const auto& f : families) {
        const std::string name = "class_" + loci::to_string(f.family);
        Json rows = Json::array();
        runner.run(name, [&](auto& fail) {
            for (std::int64_t d = 1; d <= opts.max_d; ++d) {
                try {
                    const auto profile = f.profile(d);
                    const auto solved = chow::to_q_class_basis(reg, chow::solve_class(reg, f.space, f.degree, profile));
                    const auto theorem = f.theorem(d);
                    rows.push_back(class_entry(reg, d, profile, solved, theorem));
                    if (solved != theorem)
                        fail.push_back(item("solver class " + solved.str(reg) + " != theorem " + theorem.str(reg), d));
                } catch (const std::exception& e) {
                    rows.push_back(Json{{"d", d}, {"error", e.what()}});
                    fail.emplace_back(e.what());
                }
            }
        });
        classes[loci::to_string(f.family)] = std::move(rows);
    }

    runner.run("pushforward", [&](auto& fail) {
        for (std::int64_t d = 1; d <= opts.max_d; ++d) {
            const auto pushed = chow::pushforward_m21_to_m2(reg, loci::theorem_m21(d, reg));
            const auto m2 = loci::theorem_m2(d, reg);
            if (pushed != m2) fail.push_back(item(pushed.str(reg) + " != " + m2.str(reg), d));
        }
    });

    runner.run("qmod_certify", [&](auto& fail) {
        for (auto& c : loci::qmod_certify_all(opts.order, opts.weight, reg)) {
            if (!c.fit.ok()) fail.push_back(loci::to_string(c.family) + " " + c.label + " is not quasimodular");
            series.push_back(Json{{"family", loci::to_string(c.family)},
                                  {"label", c.label},
                                  {"series", json_io::to_json(c.series)},
                                  {"fit", json_io::to_json(c.fit)}});
        }
    });

    runner.run("appendix", [&](auto& fail) {
        for (std::int64_t d = 1; d <= 40; ++d) {
            loci::appendix_typeA(d);
            loci::appendix_typeB_extra(d);
        }
        const auto fits = loci::appendix_cancellation_series(opts.order, opts.weight);
        if (fits.type_a.ok()) fail.emplace_back("type A series unexpectedly quasimodular");
        if (fits.type_b.ok()) fail.emplace_back("type B series unexpectedly quasimodular");
        if (!fits.sum.ok()) fail.emplace_back("type A + type B series is not quasimodular");
        appendix = Json{{"type_a", json_io::to_json(fits.type_a)},
                        {"type_b", json_io::to_json(fits.type_b)},
                        {"sum", json_io::to_json(fits.sum)}};
    });

    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json j{{"name", c.name}, {"ok", c.ok}};
        if (!c.ok) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    Json inject = Json::array();
    for (const auto& s : opts.inject_pairings) inject.push_back(s);
    report.json = json_io::envelope(
        "verify", Json{{"options", {{"max_d", opts.max_d}, {"N", opts.order}, {"weight", opts.weight}, {"inject_pairing", inject}}},
                       {"ok", report.ok},
                       {"first_failure", report.first_failure ? Json(*report.first_failure) : Json(nullptr)},
                       {"checks", checks},
                       {"classes", classes},
                       {"series", series},
                       {"appendix", appendix}});
    return report;
}

} // namespace delliptic::verify
