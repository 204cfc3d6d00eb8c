// hallwright: exact Hall-algebra products and the named verification suites,
// reported as schema "hallwright/1" JSON.

#include "CLI11.hpp"

#include "hallwright/hallalg.hpp"
#include "hallwright/report.hpp"
#include "hallwright/suites.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace hallwright;

HallContext make_context(const std::string& quiver, int q) {
    if (quiver == "kronecker") {
        check(q >= 2, "kronecker products are computed at a field order: pass --q >= 2");
        return HallContext::kronecker_at(q);
    }
    if (quiver.rfind("A~", 0) == 0) {
        const std::string tail = quiver.substr(2);
        check(!tail.empty() &&
                  tail.find_first_not_of("0123456789") == std::string::npos,
              "unknown quiver '" + quiver + "': expected A~<l> or kronecker");
        int l = std::stoi(tail);
        check(l >= 1, "cyclic quiver rank must satisfy l >= 1");
        return q == 0 ? HallContext::cyclic_generic(l) : HallContext::cyclic_at(l, q);
    }
    throw std::runtime_error("unknown quiver '" + quiver +
                             "': expected A~<l> or kronecker");
}

void emit(const Report& r) { std::cout << r.to_json().dump(2) << "\n"; }

int run_mul(const std::string& quiver, int q, const std::string& lhs,
            const std::string& rhs) {
    Report r;
    r.command = "mul";
    r.parameters["quiver"] = quiver;
    if (q != 0) r.parameters["q"] = q;
    r.parameters["lhs"] = lhs;
    r.parameters["rhs"] = rhs;

    auto t0 = std::chrono::steady_clock::now();
    HallAlgebra h(make_context(quiver, q));
    HallElement a = h.parse(lhs);
    HallElement b = h.parse(rhs);
    HallElement product = h.mul(a, b);

    DimVec want = add(a.degree().value(), b.degree().value());
    r.add("product is homogeneous of the summed degree", dimvec_str(want),
          product.degree() ? dimvec_str(*product.degree()) : "(none)");
    r.result = h.to_json(product);
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    emit(r);
    return r.pass() ? 0 : 1;
}

int run_verify(const std::string& name, const std::string& scale,
               const SuiteParams& overrides) {
    const Suite* suite = find_suite(name);
    if (suite == nullptr) {
        std::cerr << "error: unknown suite '" << name << "'\n"
                  << "available suites:\n";
        for (const auto& s : suites())
            std::cerr << "  " << s.name << ": " << s.summary << "\n";
        return 2;
    }
    Report r = run_suite(*suite, scale, overrides);
    emit(r);
    return r.pass() ? 0 : 1;
}

int run_report_all(const std::string& scale, const std::string& out,
                   long long seed) {
    Report agg;
    agg.command = "report-all";
    agg.parameters["scale"] = scale;
    agg.parameters["seed"] = seed;

    SuiteParams overrides;
    overrides.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& s : suites()) {
        Report r = run_suite(s, scale, overrides);
        agg.add(s.name, "pass", r.pass() ? "pass" : "fail");
        agg.suites.push_back(std::move(r));
    }
    agg.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

    const std::string text = agg.to_json().dump(2) + "\n";
    std::cout << text;
    std::ofstream file(out);
    check(file.good(), "cannot open report file '" + out + "'");
    file << text;
    return agg.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hall-algebra computations for nilpotent cyclic-quiver "
                 "and Kronecker representations"};
    app.require_subcommand(1);

    std::string quiver, lhs, rhs;
    int mul_q = 0;
    auto* mul = app.add_subcommand("mul", "multiply two iso-classes and print "
                                          "the product as a report");
    mul->add_option("--quiver", quiver, "A~<l> (cyclic) or kronecker")->required();
    mul->add_option("--q", mul_q,
                    "field order; omit for the generic cyclic algebra");
    mul->add_option("--lhs", lhs, "left factor, e.g. \"S0(2)+S1(1)\" or \"P(1)\"")
        ->required();
    mul->add_option("--rhs", rhs, "right factor")->required();

    std::string name, scale = "full";
    int n = 0, q = 0, l = 0, weight = 0;
    long long seed = 20260815;
    auto* verify = app.add_subcommand("verify", "run one named verification suite");
    verify->add_option("name", name, "suite name (any other value lists them)")
        ->required();
    auto* opt_n = verify->add_option("--n", n, "size bound override");
    auto* opt_q = verify->add_option("--q", q, "field order override");
    auto* opt_l = verify->add_option("--l", l, "cyclic rank override");
    auto* opt_w = verify->add_option("--weight", weight, "weight bound override");
    verify->add_option("--scale", scale, "smoke or full (default full)")
        ->check(CLI::IsMember({"smoke", "full"}));
    verify->add_option("--seed", seed, "recorded in the report");

    std::string rep_scale = "smoke", out = "hallwright-report.json";
    long long rep_seed = 20260815;
    auto* report = app.add_subcommand(
        "report-all", "run every suite and write the aggregate report");
    report->add_option("--scale", rep_scale, "smoke or full (default smoke)")
        ->check(CLI::IsMember({"smoke", "full"}));
    report->add_option("--out", out, "report file (default hallwright-report.json)");
    report->add_option("--seed", rep_seed, "recorded in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mul) return run_mul(quiver, mul_q, lhs, rhs);
        if (*verify) {
            SuiteParams overrides;
            if (opt_n->count() > 0) overrides.n = n;
            if (opt_q->count() > 0) overrides.q = q;
            if (opt_l->count() > 0) overrides.l = l;
            if (opt_w->count() > 0) overrides.weight = weight;
            overrides.seed = seed;
            return run_verify(name, scale, overrides);
        }
        if (*report) return run_report_all(rep_scale, out, rep_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
