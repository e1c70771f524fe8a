#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace skyline {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json witness;  // null unless the check has something to show
};

struct VerificationReport {
    std::vector<int> alpha;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

nlohmann::json to_json(const VerificationReport& r);

}  // namespace skyline
