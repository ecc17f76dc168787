// End-to-end tests of the command-line tool. The binary path comes from the
// QENT_CLI environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "qent/catalog.hpp"
#include "qent/density_matrix.hpp"

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* path = std::getenv("QENT_CLI");
    REQUIRE_MESSAGE(path != nullptr, "QENT_CLI must point at the CLI binary");
    return path;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("compute on a catalog state") {
    const RunResult r = run_cli("compute --state ghz:3 --subset 1,2 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["B"].get<double>() - 1.0 / 3) < 1e-12);
    CHECK(std::abs(j["raw_sum"].get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(j["normalization"].get<double>() - 3.0) < 1e-12);
    CHECK(j["subset"] == json::array({1, 2}));
}

TEST_CASE("compute on an inline ket expression") {
    const RunResult r = run_cli("compute --state \"(|01>-|10>)/sqrt(2)\" --dims 2,2 --subset 1,2 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(json::parse(r.out)["B"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("compute with a normalization override") {
    const RunResult r = run_cli("compute --state bell --subset 1,2 --norm 6 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(json::parse(r.out)["B"].get<double>() - 0.5) < 1e-12);
}

TEST_CASE("compute on a density-matrix file") {
    const std::string path = "/tmp/qent_test_werner.json";
    std::ofstream(path) << qent::density_to_json(qent::catalog::werner(0.75));
    const RunResult r = run_cli("compute --state @" + path + " --subset 1,2 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(json::parse(r.out)["B"].get<double>() - 4.0 / 9) < 1e-12);
}

TEST_CASE("compute on a ket file infers qubit dims") {
    const std::string path = "/tmp/qent_test_ket.txt";
    std::ofstream(path) << "(|001>+|010>+|100>)/sqrt(3)";
    const RunResult r = run_cli("compute --state @" + path + " --subset 1,2,3 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(json::parse(r.out)["B"].get<double>() - 280.0 / 729) < 1e-12);
}

TEST_CASE("tensor dump lists the ghz4 entries") {
    const RunResult r = run_cli("tensor --state ghz:4 --subset 1,2,3,4 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["entries"].size() == 9);
    double zzzz = 0;
    for (const auto& e : j["entries"])
        if (e["index"] == json::array({3, 3, 3, 3})) zzzz = e["value"].get<double>();
    CHECK(std::abs(zzzz + 2.0) < 1e-12);
}

TEST_CASE("tables reproduce and report the expected status mix") {
    const RunResult r = run_cli("tables --json");
    REQUIRE(r.exit_code == 0);  // hard rows all match
    const json j = json::parse(r.out);
    REQUIRE(j.contains("rows"));
    REQUIRE(j.contains("calibration"));
    CHECK(std::abs(j["calibration"]["2"].get<double>() - 3.0) < 1e-12);
    CHECK(std::abs(j["calibration"]["3"].get<double>() - 4.0) < 1e-12);
    CHECK(std::abs(j["calibration"]["4"].get<double>() - 12.0) < 1e-12);
    int mismatches = 0;
    for (const auto& row : j["rows"]) {
        for (const char* key : {"state", "subset", "m", "expected", "computed", "error", "status"})
            REQUIRE(row.contains(key));
        const std::string status = row["status"].get<std::string>();
        REQUIRE((status == "match" || status == "mismatch"));
        if (status == "mismatch") {
            ++mismatches;
            // only the m = 3 calibration-hypothesis rows of phi4 may mismatch
            CHECK(row["state"] == "phi4");
            CHECK(row["m"] == 3);
            CHECK(row["calibration_hypothesis"] == true);
        }
    }
    CHECK(mismatches == 4);
}

TEST_CASE("calibrate prints the constant") {
    const RunResult r = run_cli("calibrate -m 3 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(json::parse(r.out)["normalization"].get<double>() - 4.0) < 1e-12);
}

TEST_CASE("props subcommand reports a pass") {
    const RunResult r = run_cli("props separable-zero --trials 10 --seed 3 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["trials"] == 10);
    CHECK(j["worst_deviation"].get<double>() < 1e-10);
}

TEST_CASE("roof subcommand labels the upper bound") {
    const RunResult r = run_cli("roof --state werner:1.0 --subset 1,2 --restarts 2 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["roof_upper_bound"].get<double>() - 1.0) < 1e-9);

    const RunResult h = run_cli("roof --state werner:1.0 --subset 1,2 --restarts 2");
    CHECK(h.out.find("roof (upper bound)") != std::string::npos);
}

TEST_CASE("exit codes encode the error class") {
    CHECK(run_cli("compute --state \"bogus(\" --subset 1,2").exit_code == 2);   // parse
    CHECK(run_cli("compute --state \"(|01>\" --dims 2,2 --subset 1,2").exit_code == 2);
    CHECK(run_cli("compute --state ghz:3 --subset 1,9").exit_code == 3);        // shape
    CHECK(run_cli("compute --state ghz:13 --subset 1,2").exit_code == 3);       // max-qubits guard
    const std::string path = "/tmp/qent_test_bad_rho.json";
    std::ofstream(path) << "{\"dims\": [2], \"entries\": [[1,0],[0.5,0],[0,0],[0,0]]}";
    CHECK(run_cli("compute --state @" + path + " --subset 1 --json").exit_code == 4);  // numeric
}
