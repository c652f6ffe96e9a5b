#include "monoidlab/papercheck.hpp"

#include "monoidlab/report.hpp"

#include <doctest.h>

#include <fstream>

using namespace monoidlab;

TEST_CASE("suite names are validated") {
    PapercheckParams params;
    CHECK_THROWS_AS(run_papercheck("no-such-suite", params), std::invalid_argument);
    const auto& suites = papercheck_suites();
    CHECK(std::find(suites.begin(), suites.end(), "all") != suites.end());
}

TEST_CASE("reports are deterministic up to wall time") {
    PapercheckParams params;
    auto first = run_papercheck("trinomials", params);
    auto second = run_papercheck("trinomials", params);
    CHECK(reports_to_json(first, /*include_wall=*/false) ==
          reports_to_json(second, /*include_wall=*/false));
}

TEST_CASE("reports are sorted by id and carry budgets") {
    PapercheckParams params;
    auto reports = run_papercheck("trinomials", params);
    REQUIRE_FALSE(reports.empty());
    for (std::size_t i = 1; i < reports.size(); ++i) {
        CHECK(reports[i - 1].id < reports[i].id);
    }
    for (const CheckReport& r : reports) {
        CHECK(r.budgets.contains("seed"));
        CHECK((r.verdict == "pass" || r.verdict == "fail" || r.verdict == "unknown-at-budget"));
    }
}

TEST_CASE("exit code contract") {
    std::vector<CheckReport> reports(2);
    reports[0].verdict = "pass";
    reports[1].verdict = "unknown-at-budget";
    CHECK(exit_code_for(reports) == 0);
    reports[1].verdict = "fail";
    CHECK(exit_code_for(reports) == 1);
}

TEST_CASE("shipped refute corpus matches the data file") {
    nlohmann::json embedded = nlohmann::json::parse(refute_corpus_json());
    CHECK(embedded.size() == 20);
    std::ifstream file(std::string(MONOIDLAB_SOURCE_DIR) + "/data/refute_candidates.json");
    REQUIRE(file.good());
    nlohmann::json on_disk = nlohmann::json::parse(file);
    CHECK(embedded == on_disk);
}
