#include "doctest.h"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = "cli_capture_" + std::to_string(counter++);
    const std::string cmd = std::string("\"") + HALLWRIGHT_CLI_PATH + "\" " +
                            args + " > " + base + ".out 2> " + base + ".err";
    int rc = std::system(cmd.c_str());
    RunResult r;
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    r.code = WEXITSTATUS(rc);
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    return r;
}

void zero_wall_time(ordered_json& j) {
    j["wall_time_ms"] = 0;
    if (j.contains("suites"))
        for (auto& s : j["suites"]) zero_wall_time(s);
}

} // namespace

TEST_CASE("mul multiplies simples on the 2-cycle") {
    RunResult r = run_cli("mul --quiver A~1 --q 2 --lhs \"S0(1)\" --rhs \"S1(1)\"");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["schema"] == "hallwright/1");
    CHECK(j["status"] == "pass");
    CHECK(j["result"]["terms"].size() == 2);
    for (const auto& t : j["result"]["terms"]) CHECK(t["coeff"] == "1");
}

TEST_CASE("mul against the zero module echoes the other operand") {
    RunResult r = run_cli("mul --quiver A~1 --q 2 --lhs \"0\" --rhs \"S1(2)\"");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    REQUIRE(j["result"]["terms"].size() == 1);
    CHECK(j["result"]["terms"][0]["module"] == "S1(2)");
    CHECK(j["result"]["terms"][0]["coeff"] == "1");
}

TEST_CASE("mul works in the generic cyclic algebra when q is omitted") {
    RunResult r = run_cli("mul --quiver A~1 --lhs \"S0(1)\" --rhs \"S0(1)\"");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["result"]["mode"] == "generic");
    REQUIRE(j["result"]["terms"].size() == 1);
    CHECK(j["result"]["terms"][0]["coeff"] == "q+1");
}

TEST_CASE("operand parse errors report the offending position") {
    RunResult r = run_cli("mul --quiver A~1 --q 2 --lhs \"S0(2\" --rhs \"S1(1)\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("oversized products hit the named enumeration guard") {
    RunResult r = run_cli(
        "mul --quiver kronecker --q 2 --lhs \"R[inf](3)\" --rhs \"R[t](2)\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("guard") != std::string::npos);
}

TEST_CASE("kronecker products require a field order") {
    RunResult r = run_cli("mul --quiver kronecker --lhs \"P(0)\" --rhs \"I(0)\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("--q") != std::string::npos);
}

TEST_CASE("verify runs a named suite and exits by its status") {
    RunResult r = run_cli("verify thmB --n 1 --q 2");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["parameters"]["name"] == "thmB");
    CHECK(j["parameters"]["n"] == 1);
    CHECK(j["parameters"]["q"] == 2);
}

TEST_CASE("verify point-count at n=3, q=3 reports the expected 40") {
    RunResult r = run_cli("verify point-count --n 3 --q 3");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    bool forty = false;
    for (const auto& c : j["checks"])
        forty = forty || (c["expected"] == "40" && c["actual"] == "40");
    CHECK(forty);
}

TEST_CASE("verify steinitz accepts the weight bound") {
    RunResult r = run_cli("verify steinitz --weight 4 --q 2");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["parameters"]["weight"] == 4);
}

TEST_CASE("unknown suite names list the available suites") {
    RunResult r = run_cli("verify no-such-suite");
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown suite") != std::string::npos);
    CHECK(r.err.find("available suites") != std::string::npos);
    CHECK(r.err.find("riedtmann") != std::string::npos);
    CHECK(r.err.find("steinitz") != std::string::npos);
}

TEST_CASE("verify output is deterministic apart from wall time") {
    RunResult a = run_cli("verify graded-dim --scale smoke");
    RunResult b = run_cli("verify graded-dim --scale smoke");
    CHECK(a.code == 0);
    ordered_json ja = ordered_json::parse(a.out);
    ordered_json jb = ordered_json::parse(b.out);
    zero_wall_time(ja);
    zero_wall_time(jb);
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("report-all writes the same bytes to stdout and the report file") {
    RunResult r = run_cli("report-all --scale smoke --out cli_report.json");
    CHECK(r.code == 0);
    CHECK(r.out == slurp("cli_report.json"));
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["schema"] == "hallwright/1");
    CHECK(j["command"] == "report-all");
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].size() == 12);
    CHECK(j["suites"].size() == 12);
    for (const auto& c : j["checks"]) CHECK(c["actual"] == "pass");
}
