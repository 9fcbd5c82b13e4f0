#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delliptic/chow.hpp"
#include "delliptic/json_io.hpp"

namespace delliptic::verify {

struct Options {
    std::int64_t max_d = 10;
    std::size_t order = 30;
    unsigned weight = 6;
    /// "SPACE:A:B:VALUE" overrides applied to a copy of the built-in registry.
    std::vector<std::string> inject_pairings;
};

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct Report {
    bool ok = true;
    std::vector<Check> checks;
    std::optional<std::string> first_failure;
    json_io::Json json;
};

/// Copy of reg with one pairing entry overwritten. Throws PreconditionError on a
/// malformed spec or on labels that do not pair.
chow::Registry inject_pairing(const chow::Registry& reg, const std::string& spec);

/// Entries where reg differs from the transcribed reference tables, including entries
/// present on one side only. Empty when the registry is intact.
std::vector<std::string> pairing_table_mismatches(const chow::Registry& reg);

/// Runs every check in a fixed order. Failures are collected, not thrown; option
/// errors (bad injection, order too small, max_d < 1) throw PreconditionError.
Report run(const Options& opts);

} // namespace delliptic::verify
