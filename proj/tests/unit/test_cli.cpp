#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coverbound/cli.hpp"
#include "coverbound/generators.hpp"

using namespace coverbound;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto dir = fs::temp_directory_path() / "coverbound_cli_tests";
    fs::create_directories(dir);
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
}

const std::string kK4 = "0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n";

}  // namespace

TEST_CASE("constants") {
    auto r = run({"constants", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["results"]["mu"].get<double>() - 0.3169873) <= 1e-6);
    CHECK(std::abs(j["results"]["t0"].get<double>() - 0.1389) <= 5e-4);
    CHECK(j["passed"].get<bool>());
    CHECK(run({"constants"}).out.find("mu: 0.31698") != std::string::npos);
}

TEST_CASE("bound --kind simple on K4") {
    const auto path = write_temp("k4.txt", kK4);
    auto r = run({"bound", "--graph", path, "--kind", "simple", "--r", "3", "--json", "--oracle"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["bound"]["value"].get<double>() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(j["results"]["per_vertex"].size() == 4);
    CHECK(j["passed"].get<bool>());
    CHECK(j["input_hash"].is_string());
}

TEST_CASE("certify kinds") {
    const auto path = write_temp("k4c.txt", kK4);
    auto theorem = run({"certify", "--graph", path, "--kind", "theorem", "--r", "2", "--json", "--oracle"});
    CHECK(theorem.code == 0);
    auto j = nlohmann::json::parse(theorem.out);
    CHECK(j["results"]["certificate"]["rayleigh"].get<double>() == doctest::Approx(2.0));

    CHECK(run({"certify", "--graph", path, "--kind", "case1", "--r", "1"}).code == 0);
    CHECK(run({"certify", "--graph", path, "--kind", "lemma42", "--r", "2"}).code == 0);
    // K4 is below both degree thresholds: a check failure, not a usage error.
    auto l2 = run({"certify", "--graph", path, "--kind", "lambda2", "--r", "1", "--json"});
    CHECK(l2.code == 1);
    CHECK(nlohmann::json::parse(l2.out)["results"]["error"]["reason"] == "applicability-violated");
}

TEST_CASE("g tables") {
    const auto path = write_temp("c4.txt", "0 1 1\n1 2 1\n2 3 1\n3 0 1\n");
    std::string table;
    for (auto [u, v] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}})
        table += std::to_string(u) + ' ' + std::to_string(v) + " 2\n";
    const auto tpath = write_temp("g.txt", table);
    CHECK(run({"certify", "--graph", path, "--g", "table:" + tpath, "--r", "2"}).code == 0);
    const auto partial = write_temp("g_partial.txt", "0 1 1\n");
    CHECK(run({"certify", "--graph", path, "--g", "table:" + partial}).code == 2);
    const auto nonedge = write_temp("g_bad.txt", table + "0 2 1\n");
    CHECK(run({"certify", "--graph", path, "--g", "table:" + nonedge}).code == 2);
}

TEST_CASE("exit codes for usage and input errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"constants", "--bogus"}).code == 2);
    CHECK(run({"validate", "--graph", "/nonexistent/graph.txt"}).code == 2);
    const auto loop = write_temp("loop.txt", "0 0 1\n");
    auto r = run({"validate", "--graph", loop});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
    const auto p3 = write_temp("p3.txt", "0 1 1\n1 2 1\n");
    CHECK(run({"certify", "--graph", p3}).code == 2);
    CHECK(run({"bound", "--graph", p3, "--kind", "nope"}).code == 2);
    CHECK(run({"gen", "--family", "random-regular", "--n", "5", "--d", "3"}).code == 2);
    const auto k4 = write_temp("k4e.txt", kK4);
    CHECK(run({"unravel", "--graph", k4, "--r", "20", "--budget", "1000"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen, validate, unravel, chain, plot-g") {
    auto gen = run({"gen", "--family", "random-regular", "--n", "12", "--d", "3", "--seed", "5"});
    REQUIRE(gen.code == 0);
    const auto path = write_temp("rr.txt", gen.out);
    auto v = run({"validate", "--graph", path, "--json"});
    REQUIRE(v.code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["results"]["regular"].get<bool>());
    CHECK(j["results"]["edges"] == 18);

    auto u = run({"unravel", "--graph", path, "--vertex", "0", "--r", "2", "--oracle"});
    CHECK(u.code == 0);
    CHECK(std::count(u.out.begin(), u.out.end(), '\n') == 3 + 6);

    auto c = run({"chain", "--graph", path, "--chain", "weighted", "--oracle"});
    CHECK(c.code == 0);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 36 * 2 + 36);

    auto p = run({"plot-g"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("y,g,ell_t0\n", 0) == 0);
    CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 514);

    auto wr = run({"gen", "--family", "weighted-regular", "--n", "30", "--d", "4", "--wmin", "0.5", "--wmax", "2",
                   "--seed", "3", "--json"});
    CHECK(wr.code == 0);
    CHECK(nlohmann::json::parse(wr.out)["passed"].get<bool>());
}

TEST_CASE("reports are byte-stable, wall time only on request") {
    const auto path = write_temp("pet.txt", serialize_graph(petersen_graph()));
    const std::vector<std::string> args{"bound", "--graph", path, "--r", "2", "--json", "--chain", "weighted"};
    CHECK(run(args).out == run(args).out);
    CHECK(run(args).out.find("wall_seconds") == std::string::npos);
    auto timed = args;
    timed.push_back("--timing");
    CHECK(run(timed).out.find("wall_seconds") != std::string::npos);
}
