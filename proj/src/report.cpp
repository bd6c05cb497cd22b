#include "oddramsey/report.hpp"

#include <chrono>
#include <ctime>

namespace oddramsey {

nlohmann::json ConditionReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"quantity", c.quantity},
                               {"measured", static_cast<double>(c.measured)},
                               {"bound_expr", c.bound_expr},
                               {"bound_value", static_cast<double>(c.bound_value)},
                               {"pass", c.pass},
                               {"note", c.note}});
    return {{"system", system}, {"params", params}, {"checks", checks_json}};
}

nlohmann::json make_manifest(const std::string& command, const nlohmann::json& params) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return {{"tool", "odd-ramsey"},
            {"version", kToolVersion},
            {"command", command},
            {"params", params},
            {"timestamp", buf}};
}

nlohmann::json make_report(const std::string& command, const nlohmann::json& params,
                           nlohmann::json result) {
    return {{"schema_version", 1},
            {"command", command},
            {"manifest", make_manifest(command, params)},
            {"result", std::move(result)}};
}

}  // namespace oddramsey
