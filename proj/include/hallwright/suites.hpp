#pragma once

// Named verification suites behind `verify` and `report-all`.  Each suite
// checks one theorem-level statement of the library at a configurable scale
// and records expected/actual pairs in a Report.  Every suite is exhaustive
// and deterministic; the seed is recorded for reproducibility but no current
// suite samples randomly.

#include "hallwright/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hallwright {

// Scale knobs.  Which fields a suite reads (and how it reads them) is listed
// in its summary; unset fields fall back to the scale defaults.  q unset
// means "sweep q over {2,3}" for specialized suites.
struct SuiteParams {
    std::optional<int> n;
    std::optional<int> q;
    std::optional<int> l;
    std::optional<int> weight;
    long long seed = 20260815;
};

struct Suite {
    std::string name;
    std::string summary;
    SuiteParams smoke;
    SuiteParams full;
    std::function<void(const SuiteParams&, Report&)> run;
};

// The fixed table, in report order.
const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);
std::vector<std::string> suite_names();

// Runs a suite at the named scale ("smoke" or "full"), applying any fields
// set in `overrides` on top of the scale defaults, and stamps command,
// parameters and wall time.
Report run_suite(const Suite& suite, const std::string& scale, const SuiteParams& overrides);

} // namespace hallwright
