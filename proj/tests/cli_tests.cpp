#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string command = std::string(MONOIDLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("monoid gens prints the generator pairs") {
    CommandResult r = run_cli("--format json monoid gens --q 2 --r 3 --n 2");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["generators"][0]["a"] == "17/72");
    CHECK(parsed["generators"][0]["b"] == "19/72");
    CHECK(parsed["generators"][1]["a"] == "971/7776");
}

TEST_CASE("monoid member emits a certificate as a JSON map") {
    CommandResult r = run_cli("--format json monoid member --q 2 --r 3 --target 1/2 --depth 1");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["member_at_depth"] == true);
    CHECK(parsed["certificate"]["a1"] == 1);
    CHECK(parsed["certificate"]["b1"] == 1);
}

TEST_CASE("monoid atomcheck reports atom-at-depth") {
    CommandResult r = run_cli("--format json monoid atomcheck --q 2 --r 3 --index a1 --depth 4");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["verdict"] == "atom-at-depth");
}

TEST_CASE("ff binom agrees with the oracle") {
    CommandResult r = run_cli("--format json ff binom --p 5 --t 4 --a 2");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["criterion"] == true);
    CHECK(parsed["oracle"] == true);
    CHECK(parsed["agree"] == true);
}

TEST_CASE("semidomain atomtest finds the Frobenius witness") {
    CommandResult r = run_cli(
        "--format json semidomain atomtest --p 2 --q 2 --r 3 --expr x^2+x+1 --depth 6");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["status"] == "reducible");
    CHECK(parsed["witness"]["left"] == "x + x^(1/2) + 1");
}

TEST_CASE("subring atomic evaluates the criterion") {
    CommandResult r = run_cli("--format json subring atomic --ring ZQ --expr '(1/2)*x^2'");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["atomic"] == false);
}

TEST_CASE("papercheck runs a fast suite and exits zero") {
    CommandResult r = run_cli("--format json papercheck trinomials");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["failed"] == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("papercheck wat 2>/dev/null").exit_code == 2);
    CHECK(run_cli("monoid gens").exit_code == 2);  // missing required options
    CHECK(run_cli("nonsense").exit_code == 2);
}
