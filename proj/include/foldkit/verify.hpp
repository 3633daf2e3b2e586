#pragma once

#include <string>
#include <vector>

namespace foldkit {

struct CaseResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CaseResult> cases;

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

/// Suites: dihedral, compare, trace, quadratic, steinberg, klprops, wgg,
/// sigma. "all" runs every one of them.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const std::string& fixture_dir = "");
std::vector<SuiteResult> run_suites(const std::string& name, const std::string& fixture_dir = "");

std::string default_fixture_dir();

} // namespace foldkit
