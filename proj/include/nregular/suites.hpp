#pragma once

#include "nregular/reps_basis.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nregular {

struct CheckResult {
    bool pass = true;
    std::string witness; // canonical dump of a counterexample, empty on pass
};

struct Check {
    std::string suite;
    std::string id;
    std::string statement;
    std::function<CheckResult()> run;
};

struct SuiteConfig {
    std::vector<std::string> suites; // empty = all
    std::vector<int> n_range = {1, 2, 3};
    HalfInt l_max{3};
    unsigned seed = 1;
    std::string format = "text"; // or "json"
    std::string out;             // empty = stdout
};

const std::vector<std::string>& all_suite_names();

/// Materialize the check list for a configuration, ordered by id.
std::vector<Check> build_checks(const SuiteConfig& cfg);

struct RunOutcome {
    int passed = 0;
    int failed = 0;
    std::string json;   // canonical report (no timing, byte-deterministic)
    std::string text;   // human-readable report incl. wall time
};

/// Execute all selected checks (worker count capped by NREGULAR_THREADS).
RunOutcome run_suites(const SuiteConfig& cfg);

/// Statement and parameters of a check id; nullopt when unknown.
std::optional<std::string> explain(const std::string& id);

/// Parse "2", "3/2", "5/2" into a HalfInt; throws IndexRangeError.
HalfInt parse_half(const std::string& s);

} // namespace nregular
