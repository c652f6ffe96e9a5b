#include "monoidlab/report.hpp"

#include <sstream>

namespace monoidlab {

nlohmann::json report_to_json(const CheckReport& report, bool include_wall) {
    nlohmann::json j{{"id", report.id},
                     {"suite", report.suite},
                     {"criterion", report.criterion},
                     {"anchor", report.anchor},
                     {"params", report.params},
                     {"budgets", report.budgets},
                     {"verdict", report.verdict},
                     {"witness", report.witness},
                     {"detail", report.detail}};
    if (include_wall) j["wall_ms"] = report.wall_ms;
    return j;
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports, bool include_wall) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : reports) arr.push_back(report_to_json(r, include_wall));
    int fails = 0, unknowns = 0;
    for (const CheckReport& r : reports) {
        if (r.verdict == "fail") ++fails;
        if (r.verdict == "unknown-at-budget") ++unknowns;
    }
    return nlohmann::json{{"checks", arr},
                          {"total", reports.size()},
                          {"failed", fails},
                          {"unknown", unknowns}};
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    for (const CheckReport& r : reports) {
        out << "[" << (r.verdict == "pass" ? "PASS" : r.verdict == "fail" ? "FAIL" : "UNKNOWN")
            << "] " << r.id << " (criterion " << r.criterion << "): " << r.anchor;
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
    }
    int fails = 0, unknowns = 0;
    for (const CheckReport& r : reports) {
        if (r.verdict == "fail") ++fails;
        if (r.verdict == "unknown-at-budget") ++unknowns;
    }
    out << reports.size() << " checks, " << fails << " failed, " << unknowns << " unknown\n";
    return out.str();
}

int exit_code_for(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports) {
        if (r.verdict == "fail") return 1;
    }
    return 0;
}

}  // namespace monoidlab
