#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace monoidlab {

/// Outcome of one desk-scale check. Every verdict carries the budgets that
/// produced it; reports serialize deterministically for a fixed seed and
/// parameter set (wall time is the only nondeterministic field).
struct CheckReport {
    std::string id;
    std::string suite;
    int criterion = 0;
    /// The claim being checked, stated as a formula or short phrase.
    std::string anchor;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json budgets = nlohmann::json::object();
    /// "pass", "fail", or "unknown-at-budget".
    std::string verdict;
    nlohmann::json witness = nlohmann::json::object();
    std::string detail;
    double wall_ms = 0.0;
};

nlohmann::json report_to_json(const CheckReport& report, bool include_wall = true);
nlohmann::json reports_to_json(const std::vector<CheckReport>& reports, bool include_wall = true);
std::string reports_to_text(const std::vector<CheckReport>& reports);

/// 0 iff no fail verdicts; unknown-at-budget counts separately and does not
/// fail the run.
int exit_code_for(const std::vector<CheckReport>& reports);

}  // namespace monoidlab
