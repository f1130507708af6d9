#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "glinf/io.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

// GLINF_CLI_PATH is injected by the build as the path of the built binary.

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
};

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "glinf_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out = temp_dir() / "stdout.txt";
    const std::string cmd =
        std::string(GLINF_CLI_PATH) + " " + args + " > " + out.string() + " 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream captured;
    captured << in.rdbuf();
#ifdef _WIN32
    const int code = raw;
#else
    const int code = WEXITSTATUS(raw);
#endif
    return {code, captured.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = temp_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("solve on a covariance file emits JSON and exit code 0") {
    const fs::path cov = write_file("cov.csv", "2.0,1.0\n1.0,2.0\n");
    RunResult r = run_cli("solve --covariance " + cov.string() + " --gamma 0 --lambda 10");
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["p"] == 2);
    CHECK(doc["termination"] == "converged");
    CHECK(std::fabs(doc["theta"][0].get<double>() - 2.0 / 3.0) <= 1e-5);
    CHECK(std::fabs(doc["theta"][1].get<double>() + 1.0 / 3.0) <= 1e-5);
}

TEST_CASE("solve accepts samples and the csv output format") {
    const fs::path samples = write_file("samples.csv", "x,y\n1.0,0.0\n-1.0,0.0\n0.5,0.2\n-0.5,-0.2\n");
    RunResult r = run_cli("solve --samples " + samples.string() +
                          " --gamma 0.1 --lambda 0.5 --format csv");
    CHECK(r.code == 0);
    int rows = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("conflicting or missing inputs exit with code 1") {
    const fs::path cov = write_file("cov.csv", "2.0,1.0\n1.0,2.0\n");
    CHECK(run_cli("solve --samples a.csv --covariance " + cov.string() +
                  " --gamma 0 --lambda 1").code == 1);
    CHECK(run_cli("solve --gamma 0 --lambda 1").code == 1);
    CHECK(run_cli("solve --covariance /nonexistent.csv --gamma 0 --lambda 1").code == 1);
    CHECK(run_cli("solve --covariance " + cov.string() + " --gamma -1 --lambda 1").code == 1);
}

TEST_CASE("exit codes distinguish the three terminations") {
    const fs::path cov = write_file("hard.csv", "1.5,0.6\n0.6,0.9\n");
    const std::string base = "solve --covariance " + cov.string() + " --gamma 0.2 --lambda 0.3";
    CHECK(run_cli(base).code == 0);
    CHECK(run_cli(base + " --epsilon 1e-300").code == 2);
    CHECK(run_cli(base + " --epsilon 1e-300 --max-iters 3").code == 3);
}

TEST_CASE("trace file has the documented header and one row per iteration") {
    const fs::path cov = write_file("cov.csv", "2.0,1.0\n1.0,2.0\n");
    const fs::path trace = temp_dir() / "trace.csv";
    RunResult r = run_cli("solve --covariance " + cov.string() +
                          " --gamma 0 --lambda 10 --trace " + trace.string());
    REQUIRE(r.code == 0);
    std::ifstream in(trace);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == glinf::kTraceHeader);
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(rows == doc["iters"].get<int>());
}

TEST_CASE("a 1x1 sweep matches a plain solve") {
    const fs::path cov = write_file("cov.csv", "2.0,1.0\n1.0,2.0\n");
    RunResult single =
        run_cli("solve --covariance " + cov.string() + " --gamma 0.1 --lambda 0.5");
    RunResult grid =
        run_cli("sweep --covariance " + cov.string() + " --gammas 0.1 --lambdas 0.5");
    REQUIRE(single.code == 0);
    REQUIRE(grid.code == 0);
    nlohmann::json sdoc = nlohmann::json::parse(single.out);
    nlohmann::json gdoc = nlohmann::json::parse(grid.out);
    REQUIRE(gdoc["results"].size() == 1);
    CHECK(gdoc["results"][0]["theta"] == sdoc["theta"]);
    CHECK(gdoc["results"][0]["iters"] == sdoc["iters"]);
}

TEST_CASE("warm and cold sweeps agree on an easy lambda chain") {
    const fs::path cov = write_file("cov.csv", "2.0,1.0\n1.0,2.0\n");
    const std::string base = "sweep --covariance " + cov.string() +
                             " --gammas 0.05 --lambdas 0.1,0.2,0.3,0.4,0.5";
    RunResult warm = run_cli(base + " --warm-start");
    RunResult cold = run_cli(base + " --cold-start");
    REQUIRE(warm.code == 0);
    REQUIRE(cold.code == 0);
    nlohmann::json wdoc = nlohmann::json::parse(warm.out);
    nlohmann::json cdoc = nlohmann::json::parse(cold.out);
    REQUIRE(wdoc["results"].size() == 5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t k = 0; k < 4; ++k)
            CHECK(std::fabs(wdoc["results"][i]["theta"][k].get<double>() -
                            cdoc["results"][i]["theta"][k].get<double>()) <= 1e-5);
}

TEST_CASE("sweep rejects malformed grids") {
    const fs::path cov = write_file("cov.csv", "2.0,1.0\n1.0,2.0\n");
    CHECK(run_cli("sweep --covariance " + cov.string() +
                  " --gammas 0.2,0.1 --lambdas 0.5").code == 1);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
    RunResult a = run_cli("verify --seed 7 --cases 5");
    RunResult b = run_cli("verify --seed 7 --cases 5");
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    CHECK((a.code == 0 || a.code == 4));
    CHECK(run_cli("verify --cases 0").code == 1);
}
