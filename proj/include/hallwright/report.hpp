#pragma once

// Machine-readable verification reports.  Every CLI command emits exactly one
// report; a report fails iff any of its checks fails, and a check passes iff
// its expected and actual renderings agree byte for byte.  Serialization is
// deterministic (ordered keys, exact strings) so identical inputs give
// identical reports apart from the wall-time field.

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hallwright {

inline constexpr const char* report_schema_id = "hallwright/1";

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    std::optional<std::string> witness;

    bool pass() const { return expected == actual; }
};

struct Report {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<Check> checks;
    long long wall_time_ms = 0;
    // `mul` carries its product here; null otherwise.
    nlohmann::ordered_json result;
    // `report-all` nests the per-suite reports here.
    std::vector<Report> suites;

    bool pass() const;
    void add(std::string name, std::string expected, std::string actual,
             std::optional<std::string> witness = std::nullopt);

    nlohmann::ordered_json to_json() const;
};

} // namespace hallwright
