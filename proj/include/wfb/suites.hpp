#pragma once

#include <string>
#include <vector>

namespace wfb {

struct Check {
    std::string id;
    std::string description;
    std::string ref;                     // rule provenance / literature citation
    std::string computed;
    std::string expected;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// names accepted by `verify <suite>`, in acceptance order
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name);

// stable JSON: fixed field order, no timestamps
std::string suite_to_json(const SuiteResult& r);

std::string suite_to_text(const SuiteResult& r);

} // namespace wfb
