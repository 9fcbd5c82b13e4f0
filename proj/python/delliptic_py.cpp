#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "delliptic/covers.hpp"
#include "delliptic/errors.hpp"
#include "delliptic/json_io.hpp"
#include "delliptic/loci.hpp"
#include "delliptic/qmod.hpp"
#include "delliptic/verify.hpp"

namespace py = pybind11;
using namespace delliptic;

namespace {

// Exact values cross the boundary as "p/q" strings; the Python wrapper turns them
// into fractions.Fraction.
std::vector<std::string> strings(const QSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coefficients()) out.push_back(c.str());
    return out;
}

std::string dump(const json_io::Json& j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_delliptic, m) {
    m.doc() = "Exact d-elliptic locus classes (native core)";

    // Translators run newest first, so the base class is registered before its subclasses.
    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<PreconditionError>(m, "PreconditionError", base);
    py::register_exception<CrossCheckFailure>(m, "CrossCheckFailure", base);

    m.def("family_labels", [](const std::string& family) { return loci::family_labels(loci::parse_family(family)); });

    m.def(
        "class_coeffs",
        [](const std::string& family, std::int64_t d) {
            if (d < 1) throw PreconditionError("d must be >= 1");
            const auto& reg = chow::Registry::builtin();
            const auto c = loci::family_class(loci::parse_family(family), d, reg);
            std::vector<std::pair<std::string, std::string>> out;
            const auto labels = c.labels(reg);
            for (std::size_t i = 0; i < labels.size(); ++i) out.emplace_back(labels[i], c.coeffs[i].str());
            return out;
        },
        py::arg("family"), py::arg("d"));

    m.def(
        "class_str",
        [](const std::string& family, std::int64_t d) {
            if (d < 1) throw PreconditionError("d must be >= 1");
            const auto& reg = chow::Registry::builtin();
            return loci::family_class(loci::parse_family(family), d, reg).str(reg);
        },
        py::arg("family"), py::arg("d"));

    m.def(
        "coefficient_series",
        [](const std::string& family, const std::string& label, std::size_t order) {
            return strings(loci::coefficient_series(loci::parse_family(family), label, order));
        },
        py::arg("family"), py::arg("label"), py::arg("order"));

    m.def(
        "fit_json",
        [](const std::vector<std::string>& coeffs, unsigned weight, std::size_t order) {
            std::vector<Rational> v;
            for (const auto& c : coeffs) v.push_back(Rational::parse(c));
            return dump(json_io::to_json(qmod::fit(QSeries(std::move(v)), weight, order)));
        },
        py::arg("coeffs"), py::arg("weight"), py::arg("order"));

    m.def(
        "eisenstein",
        [](unsigned k, std::size_t order) { return strings(qmod::eisenstein(k, order)); }, py::arg("k"),
        py::arg("order"));

    m.def(
        "hurwitz_number",
        [](int d, const std::vector<std::string>& profiles) {
            std::vector<covers::Partition> parts;
            for (const auto& p : profiles) parts.push_back(covers::Partition::parse(p));
            return covers::hurwitz_number(d, parts).str();
        },
        py::arg("d"), py::arg("profiles"));

    m.def(
        "count",
        [](const std::string& kind, std::int64_t d) {
            if (d < 1) throw PreconditionError("d must be >= 1");
            if (kind == "sublattices") return covers::count_sublattices(d).get_str();
            if (kind == "pointed-isogenies") return covers::count_pointed_isogenies(d).get_str();
            if (kind == "dd22") return covers::count_dd22(d).get_str();
            if (kind == "dd2222") return covers::count_dd2222_g2(d).get_str();
            throw PreconditionError("unknown count '" + kind + "'");
        },
        py::arg("kind"), py::arg("d"));

    m.def(
        "verify_json",
        [](std::int64_t max_d, std::size_t order, unsigned weight, const std::vector<std::string>& inject) {
            verify::Options o;
            o.max_d = max_d;
            o.order = order;
            o.weight = weight;
            o.inject_pairings = inject;
            py::gil_scoped_release release;
            return dump(verify::run(o).json);
        },
        py::arg("max_d") = 10, py::arg("order") = 30, py::arg("weight") = 6,
        py::arg("inject") = std::vector<std::string>{});
}
