#include "doctest.h"

#include "hallwright/report.hpp"
#include "hallwright/suites.hpp"

#include <fstream>
#include <string>

using namespace hallwright;
using nlohmann::ordered_json;

namespace {

// Minimal JSON-Schema interpreter covering exactly the constructs the shipped
// schema uses: type, const, enum, required, properties,
// additionalProperties:false, items, minimum, $ref:"#".
bool valid_node(const ordered_json& schema, const ordered_json& node,
                const ordered_json& root, std::string& why) {
    if (schema.contains("$ref")) {
        REQUIRE(schema["$ref"] == "#");
        return valid_node(root, node, root, why);
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && node.is_object()) ||
                  (t == "array" && node.is_array()) ||
                  (t == "string" && node.is_string()) ||
                  (t == "integer" && node.is_number_integer()) ||
                  (t == "boolean" && node.is_boolean());
        if (!ok) {
            why = "expected type " + t + ", got " + std::string(node.type_name());
            return false;
        }
    }
    if (schema.contains("const") && node != schema["const"]) {
        why = "const mismatch: " + node.dump();
        return false;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& v : schema["enum"]) hit = hit || (node == v);
        if (!hit) {
            why = "value " + node.dump() + " outside enum";
            return false;
        }
    }
    if (schema.contains("minimum") &&
        node.get<long long>() < schema["minimum"].get<long long>()) {
        why = "below minimum: " + node.dump();
        return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!node.contains(key.get<std::string>())) {
                why = "missing required key " + key.dump();
                return false;
            }
    if (node.is_object()) {
        const ordered_json props = schema.value("properties", ordered_json::object());
        const bool closed = schema.contains("additionalProperties") &&
                            schema["additionalProperties"] == false;
        for (const auto& [key, value] : node.items()) {
            if (props.contains(key)) {
                if (!valid_node(props[key], value, root, why)) {
                    why = "at key " + key + ": " + why;
                    return false;
                }
            } else if (closed) {
                why = "unexpected key " + key;
                return false;
            }
        }
    }
    if (node.is_array() && schema.contains("items"))
        for (const auto& item : node)
            if (!valid_node(schema["items"], item, root, why)) {
                why = "in array item: " + why;
                return false;
            }
    return true;
}

ordered_json shipped_schema() {
    std::ifstream in(HALLWRIGHT_SCHEMA_PATH);
    REQUIRE(in.good());
    return ordered_json::parse(in);
}

bool validates(const ordered_json& doc, std::string& why) {
    ordered_json schema = shipped_schema();
    return valid_node(schema, doc, schema, why);
}

Report sample_report() {
    Report r;
    r.command = "verify";
    r.parameters["name"] = "demo";
    r.parameters["seed"] = 20260815;
    r.add("first", "1", "1");
    r.add("second", "yes", "yes", "witness text");
    r.wall_time_ms = 7;
    return r;
}

} // namespace

TEST_CASE("a report passes iff every check passes") {
    Report r = sample_report();
    CHECK(r.pass());
    r.add("third", "0", "1");
    CHECK_FALSE(r.pass());
    CHECK(r.to_json()["status"] == "fail");
}

TEST_CASE("failure in a nested suite fails the aggregate") {
    Report agg;
    agg.command = "report-all";
    agg.add("demo", "pass", "pass");
    agg.suites.push_back(sample_report());
    CHECK(agg.pass());
    agg.suites.push_back(sample_report());
    agg.suites.back().add("broken", "0", "1");
    CHECK_FALSE(agg.pass());
    CHECK(agg.to_json()["status"] == "fail");
}

TEST_CASE("witness is emitted only when present") {
    ordered_json j = sample_report().to_json();
    CHECK_FALSE(j["checks"][0].contains("witness"));
    CHECK(j["checks"][1]["witness"] == "witness text");
}

TEST_CASE("serialization fixes the schema id and the key order") {
    ordered_json j = sample_report().to_json();
    CHECK(j["schema"] == report_schema_id);
    std::string dumped = j.dump();
    CHECK(dumped.rfind("{\"schema\":\"hallwright/1\",\"command\":\"verify\","
                       "\"parameters\":",
                       0) == 0);
    CHECK_FALSE(j.contains("result"));
    CHECK_FALSE(j.contains("suites"));
}

TEST_CASE("hand-built, suite, and aggregate reports validate against the shipped schema") {
    std::string why;
    CHECK_MESSAGE(validates(sample_report().to_json(), why), why);

    const Suite* pc = find_suite("point-count");
    REQUIRE(pc != nullptr);
    Report suite_report = run_suite(*pc, "smoke", SuiteParams{});
    CHECK_MESSAGE(validates(suite_report.to_json(), why), why);

    Report agg;
    agg.command = "report-all";
    agg.parameters["scale"] = "smoke";
    agg.add("point-count", "pass", suite_report.pass() ? "pass" : "fail");
    agg.suites.push_back(std::move(suite_report));
    CHECK_MESSAGE(validates(agg.to_json(), why), why);
}

TEST_CASE("the schema rejects malformed reports") {
    std::string why;
    ordered_json good = sample_report().to_json();

    ordered_json bad = good;
    bad["status"] = "maybe";
    CHECK_FALSE(validates(bad, why));

    bad = good;
    bad.erase("wall_time_ms");
    CHECK_FALSE(validates(bad, why));

    bad = good;
    bad["extra"] = 1;
    CHECK_FALSE(validates(bad, why));

    bad = good;
    bad["checks"][0]["verdict"] = "ok";
    CHECK_FALSE(validates(bad, why));

    bad = good;
    bad["wall_time_ms"] = -1;
    CHECK_FALSE(validates(bad, why));

    bad = good;
    bad["schema"] = "hallwright/2";
    CHECK_FALSE(validates(bad, why));
}
