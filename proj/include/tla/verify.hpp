#pragma once

#include <string>
#include <vector>

namespace tla {

struct IdentityResult {
    std::string name;
    bool passed = true;
    long instances = 0;   // instances checked
    std::string detail;   // first failure diagnostics
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityResult> identities;

    bool all_pass() const {
        for (const auto& id : identities)
            if (!id.passed) return false;
        return true;
    }
};

struct SuiteBounds {
    int rmax = 4;  // word-length bound for enveloping identities
    int n = 3;     // invariant-ring point bound
};

// Names accepted by run_suite, excluding "all".
std::vector<std::string> suite_names();

// Runs one named property suite; UnknownSuite on a bad name.
SuiteReport run_suite(const std::string& name, const SuiteBounds& b);

std::string suite_report_json(const SuiteReport& r);
std::string suite_reports_json(const std::vector<SuiteReport>& rs);

} // namespace tla
