#pragma once

// JSON encodings shared by the CLI, the verify report and the Python bindings.
// Every number is written as an exact string.

#include <json.hpp>

#include "delliptic/chow.hpp"
#include "delliptic/qmod.hpp"
#include "delliptic/qseries.hpp"

namespace delliptic::json_io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "delliptic/1";

Json to_json(const Rational& r);
Json to_json(const QSeries& s);
Json to_json(const qmod::FitResult& f);
Json to_json(const chow::Registry& reg, const chow::ChowClass& c);
Json to_json(const chow::IntersectionProfile& p);

/// Accepts strings ("3", "-1/24") and JSON integers.
Rational rational_from_json(const Json& j);
/// A JSON array of coefficients, constant term first.
QSeries series_from_json(const Json& j);

/// Wraps a payload object with the schema tag as its first key.
Json envelope(const std::string& kind, Json payload);

} // namespace delliptic::json_io
