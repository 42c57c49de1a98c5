#include <doctest.h>

#include "cli.hpp"

#include <secretary/exactprob.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
    std::vector<std::string> owned{"secretary"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(owned.size());
    for (const auto& s : owned) argv.push_back(s.c_str());
    std::ostringstream out, err;
    CliResult result;
    result.code =
        secretary::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("slp emits the library value verbatim") {
    const auto res = run_cli({"slp", "--n", "100", "--b", "5", "--s", "50", "--r", "3"});
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("schema_version") == "1");
    CHECK(doc.at("kind") == "slp");
    CHECK(doc.at("n") == 100);
    CHECK(doc.at("b") == 5);
    CHECK(doc.at("s") == 50);
    CHECK(doc.at("r") == 3);
    const double lib =
        secretary::exactprob::slp_win_prob({100, 5}, {50, 3}).value();
    CHECK(doc.at("probability").get<std::string>() == sig12(lib));
}

TEST_CASE("csv and json carry identical values") {
    const auto json_res =
        run_cli({"dlp", "--n", "100", "--b", "5", "--s1", "30", "--s2", "66", "--r1", "1",
                 "--r2", "4"});
    const auto csv_res =
        run_cli({"dlp", "--format", "csv", "--n", "100", "--b", "5", "--s1", "30", "--s2",
                 "66", "--r1", "1", "--r2", "4"});
    REQUIRE(json_res.code == 0);
    REQUIRE(csv_res.code == 0);
    const auto doc = nlohmann::json::parse(json_res.out);
    const std::string probability = doc.at("probability").get<std::string>();
    std::istringstream csv(csv_res.out);
    std::string header, row;
    REQUIRE(std::getline(csv, header));
    REQUIRE(std::getline(csv, row));
    CHECK(header ==
          "schema_version,kind,n,b,s1,s2,r1,r2,probability");
    CHECK(row == "1,dlp,100,5,30,66,1,4," + probability);
}

TEST_CASE("optimal reports thresholds and exact value") {
    const auto res = run_cli({"optimal", "--n", "6", "--b", "2", "--exact"});
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("kind") == "optimal");
    CHECK(doc.at("thresholds").get<std::string>() == "2;4");
    CHECK(doc.at("value_exact").get<std::string>() == "31/45");
}

TEST_CASE("errors-table rows are sorted by n then b") {
    const auto res = run_cli(
        {"errors-table", "--n", "50,30", "--b", "3,2", "--format", "csv"});
    REQUIRE(res.code == 0);
    std::istringstream csv(res.out);
    std::string line;
    REQUIRE(std::getline(csv, line));  // header
    std::vector<std::pair<int, int>> seen;
    while (std::getline(csv, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');  // schema_version
        std::getline(cells, cell, ',');  // kind
        CHECK(cell == "error-table");
        std::getline(cells, cell, ',');
        const int n = std::stoi(cell);
        std::getline(cells, cell, ',');
        const int b = std::stoi(cell);
        seen.emplace_back(n, b);
    }
    CHECK(seen == std::vector<std::pair<int, int>>{{30, 2}, {30, 3}, {50, 2}, {50, 3}});
}

TEST_CASE("convergence csv layout is pinned") {
    const auto res = run_cli(
        {"convergence", "--b", "1", "--r", "1", "--n", "200,100", "--format", "csv"});
    REQUIRE(res.code == 0);
    std::istringstream csv(res.out);
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line == "n,p_finite,p_limit");
    std::vector<int> ns;
    std::string last_limit;
    while (std::getline(csv, line)) {
        std::istringstream cells(line);
        std::string n, fin, lim;
        std::getline(cells, n, ',');
        std::getline(cells, fin, ',');
        std::getline(cells, lim, ',');
        ns.push_back(std::stoi(n));
        if (!last_limit.empty()) CHECK(lim == last_limit);
        last_limit = lim;
    }
    CHECK(ns == std::vector<int>{100, 200});  // sorted ascending
}

TEST_CASE("convergence with an empty grid is header-only") {
    const auto res = run_cli({"convergence", "--b", "1", "--r", "1", "--format", "csv"});
    REQUIRE(res.code == 0);
    CHECK(res.out == "n,p_finite,p_limit\n");
}

TEST_CASE("simulate echoes the run and is self-consistent") {
    const auto res = run_cli({"simulate", "--n", "20", "--b", "2", "--s", "5", "--r", "1",
                              "--trials", "50000", "--seed", "42"});
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("kind") == "simulate");
    CHECK(doc.at("policy").get<std::string>() == "slp(s=5,r=1)");
    CHECK(doc.at("trials") == 50000);
    CHECK(doc.at("seed") == 42);
    const double estimate = std::stod(doc.at("estimate").get<std::string>());
    const double successes = doc.at("successes").get<double>();
    CHECK(estimate == doctest::Approx(successes / 50000.0).epsilon(1e-12));
}

TEST_CASE("--out writes exactly what stdout would carry") {
    const std::string path = "cli_out_test.json";
    const auto direct = run_cli({"slp", "--n", "30", "--b", "3", "--s", "10", "--r", "2"});
    const auto filed = run_cli(
        {"slp", "--n", "30", "--b", "3", "--s", "10", "--r", "2", "--out", path.c_str()});
    REQUIRE(direct.code == 0);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("exit codes distinguish argument and computation failures") {
    CHECK(run_cli({"slp", "--n", "100", "--b", "5", "--s", "50"}).code == 2);
    CHECK(run_cli({"slp", "--n", "100", "--b", "5", "--s", "50", "--r", "9"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"dlp-opt", "--n", "50", "--b", "1"}).code == 2);
    CHECK(run_cli({"slp", "--n", "4", "--b", "2", "--s", "1", "--r", "1", "--out",
                   "/nonexistent-dir/x.json"})
              .code == 1);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"simulate", "--n", "10", "--b", "2", "--s", "3"}).code == 2);
    CHECK(run_cli({"asymptotic", "--b", "5", "--alpha", "0.5"}).code == 2);
    CHECK(run_cli({"convergence", "--b", "5", "--r", "3", "--r1", "1", "--r2", "2"}).code ==
          2);
}

TEST_CASE("asymptotic evaluation record") {
    const auto res =
        run_cli({"asymptotic", "--b", "5", "--r", "3", "--alpha", "0.5046"});
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.at("kind") == "asymptotic");
    CHECK(doc.at("b") == 5);
    CHECK(doc.at("r") == 3);
    const double value = std::stod(doc.at("value").get<std::string>());
    CHECK(value == doctest::Approx(0.765697).epsilon(1e-5));
}

}  // TEST_SUITE
