#include "doctest.h"

#include "hallwright/suites.hpp"

#include <functional>
#include <string>
#include <vector>

using namespace hallwright;
using nlohmann::ordered_json;

namespace {

void zero_wall_time(ordered_json& j) {
    j["wall_time_ms"] = 0;
    if (j.contains("suites"))
        for (auto& s : j["suites"]) zero_wall_time(s);
}

} // namespace

TEST_CASE("the registry lists the twelve suites in order") {
    const std::vector<std::string> want = {
        "steinitz",  "thmA-central", "thmA-centre-dim", "ext-lemma",
        "thmB",      "point-count",  "series",          "sigma",
        "reflection", "graded-dim",  "powersum",        "riedtmann"};
    CHECK(suite_names() == want);
    for (const auto& name : want) {
        const Suite* s = find_suite(name);
        REQUIRE(s != nullptr);
        CHECK(s->name == name);
        CHECK_FALSE(s->summary.empty());
    }
    CHECK(find_suite("no-such-suite") == nullptr);
}

TEST_CASE("every suite passes at smoke scale") {
    for (const auto& s : suites()) {
        Report r = run_suite(s, "smoke", SuiteParams{});
        INFO(s.name);
        for (const auto& c : r.checks) {
            INFO(c.name, ": expected ", c.expected, ", actual ", c.actual);
            CHECK(c.pass());
        }
        CHECK(r.pass());
        CHECK(r.command == "verify");
        CHECK(r.parameters["name"] == s.name);
        CHECK(r.parameters["scale"] == "smoke");
        CHECK(r.parameters["seed"] == 20260815);
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("suite reports are deterministic apart from wall time") {
    const Suite* s = find_suite("graded-dim");
    REQUIRE(s != nullptr);
    ordered_json a = run_suite(*s, "smoke", SuiteParams{}).to_json();
    ordered_json b = run_suite(*s, "smoke", SuiteParams{}).to_json();
    zero_wall_time(a);
    zero_wall_time(b);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("size overrides reach the suite and its parameter echo") {
    const Suite* s = find_suite("point-count");
    REQUIRE(s != nullptr);
    SuiteParams o;
    o.n = 3;
    o.q = 3;
    Report r = run_suite(*s, "full", o);
    CHECK(r.pass());
    CHECK(r.parameters["n"] == 3);
    CHECK(r.parameters["q"] == 3);
    bool forty = false;
    for (const auto& c : r.checks) forty = forty || (c.expected == "40" && c.pass());
    CHECK(forty);
    // n=3 caps the sweep: no weight-4 or weight-5 checks appear.
    for (const auto& c : r.checks) {
        CHECK(c.name.find("weight 4") == std::string::npos);
        CHECK(c.name.find("weight 5") == std::string::npos);
    }
}

TEST_CASE("only the two advertised scales are accepted") {
    const Suite* s = find_suite("sigma");
    REQUIRE(s != nullptr);
    CHECK_THROWS(run_suite(*s, "medium", SuiteParams{}));
}
