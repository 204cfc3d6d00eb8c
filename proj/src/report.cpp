#include "hallwright/report.hpp"

namespace hallwright {

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass()) return false;
    for (const auto& s : suites)
        if (!s.pass()) return false;
    return true;
}

void Report::add(std::string name, std::string expected, std::string actual,
                 std::optional<std::string> witness) {
    checks.push_back(
        {std::move(name), std::move(expected), std::move(actual), std::move(witness)});
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = report_schema_id;
    j["command"] = command;
    j["parameters"] = parameters.is_null() ? nlohmann::ordered_json::object() : parameters;
    j["status"] = pass() ? "pass" : "fail";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["expected"] = c.expected;
        item["actual"] = c.actual;
        if (c.witness.has_value()) item["witness"] = *c.witness;
        arr.push_back(std::move(item));
    }
    j["checks"] = std::move(arr);
    j["wall_time_ms"] = wall_time_ms;
    if (!result.is_null()) j["result"] = result;
    if (!suites.empty()) {
        nlohmann::ordered_json subs = nlohmann::ordered_json::array();
        for (const auto& s : suites) subs.push_back(s.to_json());
        j["suites"] = std::move(subs);
    }
    return j;
}

} // namespace hallwright
