#include "delliptic/json_io.hpp"

#include "delliptic/errors.hpp"

namespace delliptic::json_io {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QSeries& s) {
    Json out = Json::array();
    for (const auto& c : s.coefficients()) out.push_back(c.str());
    return out;
}

Json to_json(const qmod::FitResult& f) {
    if (!f.ok()) {
        const auto& r = f.refutation();
        return Json{{"not_quasimodular", {{"max_weight", r.max_weight}, {"order", r.order}}}};
    }
    Json monomials = Json::array();
    for (const auto& [m, c] : f.combination())
        monomials.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}, {"coeff", c.str()}});
    return Json{{"monomials", monomials}};
}

Json to_json(const chow::Registry& reg, const chow::ChowClass& c) {
    Json coeffs = Json::object();
    const auto labels = c.labels(reg);
    for (std::size_t i = 0; i < labels.size(); ++i) coeffs[labels[i]] = c.coeffs[i].str();
    return Json{{"space", chow::to_string(c.space)}, {"degree", c.degree}, {"coeffs", coeffs}};
}

Json to_json(const chow::IntersectionProfile& p) {
    Json values = Json::object();
    for (const auto& [label, v] : p.values) values[label] = v.str();
    return Json{{"space", chow::to_string(p.space)}, {"values", values}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw PreconditionError("expected an exact number (string or integer), got " + j.dump());
}

QSeries series_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw PreconditionError("expected a non-empty JSON array of coefficients");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& x : j) coeffs.push_back(rational_from_json(x));
    return QSeries(std::move(coeffs));
}

Json envelope(const std::string& kind, Json payload) {
    Json out{{"schema", kSchema}, {"kind", kind}};
    for (auto& [k, v] : payload.items()) out[k] = std::move(v);
    return out;
}

} // namespace delliptic::json_io
