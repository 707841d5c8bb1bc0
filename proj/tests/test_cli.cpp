#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dipolar/constants.hpp"
#include "dipolar/feasibility.hpp"
#include "testutil.hpp"

using testutil::close_rel;
using testutil::parse_csv;
using testutil::run_process;

namespace {

const std::string cli = DIPOLAR_CLI_PATH;

} // namespace

TEST_CASE("systems lists the builtin catalog") {
    const auto human = run_process(cli, {"systems"});
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("BH2+") != std::string::npos);
    CHECK(human.out.find("Rb87") != std::string::npos);
    CHECK(human.out.find("NV") != std::string::npos);

    const auto csv = run_process(cli, {"systems", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    const auto rows = parse_csv(csv.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"name", "two_j_down", "two_j_up", "gamma_down",
                                              "gamma_up", "coherence_time_s", "note"});
    CHECK(rows[1][0] == "BH2+");
    CHECK(rows[1][5].empty()); // no coherence time for the molecular rotor
    CHECK(rows[2][0] == "Rb87");
}

TEST_CASE("systems JSON output round-trips into the catalog schema") {
    const auto res = run_process(cli, {"systems", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    const auto parsed = dipolar::catalog_from_json(res.out);
    const auto builtin = dipolar::builtin_catalog();
    REQUIRE(parsed.size() == builtin.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].name == builtin[i].name);
        CHECK(parsed[i].gamma_down == builtin[i].gamma_down);
        CHECK(parsed[i].gamma_up == builtin[i].gamma_up);
        CHECK(parsed[i].coherence_time_s == builtin[i].coherence_time_s);
    }
}

TEST_CASE("systems with a malformed catalog file fails with a diagnostic") {
    const std::string path = testutil::write_temp_file("bad_catalog", "this is not json");
    const auto res = run_process(cli, {"systems", "--catalog", path});
    CHECK(res.exit_code != 0);
    CHECK(res.out.empty());
    CHECK(res.err.find("error") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("DIPOLAR_CATALOG env var provides the default catalog") {
    const std::string custom = R"([{"name":"TestIon","two_j_down":0,"two_j_up":2,
        "gamma_down":1e9,"gamma_up":1e9,"note":"synthetic"}])";
    const std::string path = testutil::write_temp_file("env_catalog", custom);
    const auto res = run_process(cli, {"systems", "--format", "csv"}, "DIPOLAR_CATALOG=" + path);
    CHECK(res.exit_code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][0] == "TestIon");
    std::remove(path.c_str());
}

TEST_CASE("gatetime matches the paper numbers") {
    const auto rb = run_process(cli, {"gatetime", "--system", "Rb87", "--d", "1e-7",
                                      "--format", "csv"});
    REQUIRE(rb.exit_code == 0);
    const auto rows = parse_csv(rb.out);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0] ==
            std::vector<std::string>{"system", "d_m", "t_cz_s", "coherence_ratio", "verdict"});
    CHECK(close_rel(std::stod(rows[1][2]), 8.5e-3, 0.02));
    CHECK(rows[1][4] == "favorable");

    const auto nv = run_process(cli, {"gatetime", "--system", "NV", "--d", "1e-8",
                                      "--format", "csv"});
    REQUIRE(nv.exit_code == 0);
    const auto nv_rows = parse_csv(nv.out);
    CHECK(close_rel(std::stod(nv_rows[1][2]), 3.6e-6, 0.02));
    CHECK(nv_rows[1][4] == "unfavorable");
}

TEST_CASE("gatetime with inline parameters") {
    const auto res = run_process(cli, {"gatetime", "--gamma-down", "1e10", "--gamma-up", "1e10",
                                       "--J", "0.5", "--n", "1", "--d", "1e-7",
                                       "--format", "csv"});
    REQUIRE(res.exit_code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 2);
    // bracket = 1e10 * (3/2 - 1/2) = 1e10
    const double expected =
        2.0 * dipolar::constants::pi * dipolar::constants::pi * 1e-21 /
        (dipolar::constants::mu0 * dipolar::constants::hbar * 1e20);
    CHECK(close_rel(std::stod(rows[1][2]), expected, 1e-9));
}

TEST_CASE("gatetime reports frozen coupling as an error") {
    const auto res = run_process(cli, {"gatetime", "--gamma-down", "1e10", "--gamma-up", "1e10",
                                       "--J", "0", "--n", "0", "--d", "1e-7"});
    CHECK(res.exit_code != 0);
    CHECK(res.out.empty());
    CHECK(res.err.find("error") != std::string::npos);
}

TEST_CASE("gatetime rejects unknown systems") {
    const auto res = run_process(cli, {"gatetime", "--system", "Cs133", "--d", "1e-7"});
    CHECK(res.exit_code != 0);
    CHECK(res.err.find("Cs133") != std::string::npos);
}

TEST_CASE("evolve --until-cz ends on the controlled-Z gate for every system") {
    for (const std::string name : {"BH2+", "Rb87", "NV"}) {
        const auto res = run_process(cli, {"evolve", "--system", name, "--d", "1e-7",
                                           "--until-cz", "--steps", "4", "--format", "csv"});
        REQUIRE(res.exit_code == 0);
        const auto rows = parse_csv(res.out);
        REQUIRE(rows.size() == 6); // header + 5 rows
        REQUIRE(rows[0] == std::vector<std::string>{"t_s", "phi1", "phi2", "phi3", "phi4", "phi",
                                                    "cz_fidelity", "leakage"});
        const auto& last = rows.back();
        CHECK(std::abs(std::stod(last[5]) - dipolar::constants::pi) <= 1e-9);
        CHECK(std::abs(std::stod(last[6]) - 1.0) <= 1e-10);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(std::stod(rows[i][7]) <= 1e-12); // leakage column
        }
    }
}

TEST_CASE("evolve with an explicit time") {
    const auto res = run_process(cli, {"evolve", "--system", "Rb87", "--d", "1e-7", "--t", "1e-3",
                                       "--steps", "2", "--format", "csv"});
    REQUIRE(res.exit_code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 4);
    CHECK(std::stod(rows[1][0]) == 0.0);
    CHECK(close_rel(std::stod(rows[3][0]), 1e-3, 1e-12));
    CHECK(close_rel(std::stod(rows[3][5]), 3.674971869882e-1, 1e-9));
}

TEST_CASE("evolve spin-half demo reports the nonzero flip-flop element") {
    const auto res = run_process(cli, {"evolve", "--spin-half-demo", "--format", "csv"});
    REQUIRE(res.exit_code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() >= 4);
    double flip_flop = -1.0, predicted = -1.0;
    for (const auto& row : rows) {
        if (row[0] == "flip_flop_J") flip_flop = std::stod(row[1]);
        if (row[0] == "flip_flop_predicted_J") predicted = std::stod(row[1]);
    }
    CHECK(flip_flop > 0.0);
    CHECK(close_rel(flip_flop, predicted, 1e-10));
}

TEST_CASE("sweep emits ascending CSV with the spec header") {
    const auto res = run_process(cli, {"sweep", "--system", "Rb87", "--d-min", "1e-7",
                                       "--d-max", "1e-6", "--points", "10"});
    REQUIRE(res.exit_code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"d_m", "t_cz_s", "coherence_ratio"});
    for (const auto& row : rows) CHECK(row.size() == 3);
    CHECK(close_rel(std::stod(rows[1][1]), 8.5e-3, 0.02));
    CHECK(close_rel(std::stod(rows[10][1]), 8.5, 0.02));
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][0]) > std::stod(rows[i - 1][0]));
    }
}

TEST_CASE("sweep leaves coherence_ratio empty when unknown") {
    const auto res = run_process(cli, {"sweep", "--system", "BH2+", "--d-min", "1e-7",
                                       "--d-max", "1e-6", "--points", "3"});
    REQUIRE(res.exit_code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][2].empty());
}

TEST_CASE("sweep rejects a bad range") {
    const auto res = run_process(cli, {"sweep", "--system", "Rb87", "--d-min", "1e-6",
                                       "--d-max", "1e-7", "--points", "3"});
    CHECK(res.exit_code != 0);
    CHECK(res.out.empty());
}

TEST_CASE("cluster verifies chain and grid files") {
    const std::string chain4 = testutil::write_temp_file("chain4", "4\n0 1\n1 2\n2 3\n");
    const auto res = run_process(cli, {"cluster", chain4});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("PASS") != std::string::npos);
    int vertex_lines = 0;
    std::istringstream lines(res.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("vertex ", 0) == 0) ++vertex_lines;
    }
    CHECK(vertex_lines == 4);
    std::remove(chain4.c_str());

    const std::string grid22 = testutil::write_temp_file("grid22", "4\n0 1\n2 3\n0 2\n1 3\n");
    const auto grid_res = run_process(cli, {"cluster", grid22});
    CHECK(grid_res.exit_code == 0);
    CHECK(grid_res.out.find("PASS") != std::string::npos);
    std::remove(grid22.c_str());
}

TEST_CASE("cluster rejects malformed graph files") {
    const std::string bad = testutil::write_temp_file("selfloop", "3\n0 0\n");
    const auto res = run_process(cli, {"cluster", bad});
    CHECK(res.exit_code != 0);
    CHECK(res.err.find("error") != std::string::npos);
    std::remove(bad.c_str());

    const auto missing = run_process(cli, {"cluster", "/nonexistent/graph.txt"});
    CHECK(missing.exit_code != 0);
}
