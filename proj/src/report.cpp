#include "skyline/report.hpp"

namespace skyline {

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.is_null()) item["witness"] = c.witness;
        checks.push_back(std::move(item));
    }
    return nlohmann::json{
        {"alpha", r.alpha}, {"checks", std::move(checks)}, {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace skyline
