#pragma once

// Measured quantities paired with the paper-side bound expressions, plus the
// JSON report envelope shared by the CLI subcommands.

#include <string>
#include <vector>

#include "json.hpp"

namespace oddramsey {

struct BoundCheck {
    std::string quantity;     // e.g. "Delta_2(H1)"
    long double measured = 0;
    std::string bound_expr;   // expression with substituted parameters
    long double bound_value = 0;
    bool pass = false;        // informational; bounds are asymptotic
    std::string note;
};

struct ConditionReport {
    std::string system;  // "graph" or "hypergraph"
    nlohmann::json params;
    std::vector<BoundCheck> checks;

    nlohmann::json to_json() const;
};

// Report envelope: {schema_version, command, manifest, result}.
nlohmann::json make_manifest(const std::string& command, const nlohmann::json& params);
nlohmann::json make_report(const std::string& command, const nlohmann::json& params,
                           nlohmann::json result);

inline const char* kToolVersion = "0.1.0";

}  // namespace oddramsey
