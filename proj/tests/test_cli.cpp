#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

// End-to-end tests spawning the built binary.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cli() { return DIFFSPEC_CLI_PATH; }
fs::path scenario_dir() { return fs::path(DIFFSPEC_SCENARIO_DIR); }

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("diffspec_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run_cli(const std::string& args) {
    const std::string command = cli() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

json read_json(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    return json::parse(is);
}

}  // namespace

TEST_CASE("chaos-check end to end") {
    TempDir out;
    const int code = run_cli("chaos-check --scenario " + (scenario_dir() / "chaos_check_h3_ou.json").string() +
                             " --out " + out.path.string());
    CHECK(code == 0);
    const json report = read_json(out.path / "chaos_check.json");
    CHECK(report.at("eigenvalue") == "3");
    CHECK(report.at("max_support") == "6");
    CHECK(report.at("chaotic") == true);
}

TEST_CASE("bounds end to end") {
    TempDir out;
    const int code = run_cli("bounds --scenario " + (scenario_dir() / "bounds_h2_gaussian.json").string() +
                             " --out " + out.path.string() + " --format both");
    CHECK(code == 0);
    const json report = read_json(out.path / "bounds.json");
    CHECK(report.at("distance") == "36");
    CHECK(report.at("bound") == "68");
    CHECK(fs::exists(out.path / "bounds.csv"));
}

TEST_CASE("malformed polynomial exits 2") {
    TempDir dir;
    TempDir out;
    const fs::path bad = dir.path / "bad.json";
    {
        std::ofstream os(bad);
        os << R"({"schema_version":1,"command":"chaos-check","structure":[{"type":"ou"}],"polynomial":"1 + * x1"})";
    }
    CHECK(run_cli("chaos-check --scenario " + bad.string() + " --out " + out.path.string()) == 2);
}

TEST_CASE("missing required flags exit non-zero") {
    CHECK(run_cli("chaos-check") != 0);
    CHECK(run_cli("") != 0);
}

TEST_CASE("verify end to end with seed override") {
    TempDir out;
    const int code = run_cli("verify --scenario " + (scenario_dir() / "verify_quick.json").string() + " --out " +
                             out.path.string() + " --seed 99");
    CHECK(code == 0);
    const json report = read_json(out.path / "verify.json");
    CHECK(report.at("seed") == 99);
    CHECK(report.at("all_passed") == true);
}

TEST_CASE("simulate end to end") {
    TempDir out;
    const int code = run_cli("simulate --scenario " + (scenario_dir() / "simulate_paired_gaussian_small.json").string() +
                             " --out " + out.path.string() + " --format both --workers 2");
    CHECK(code == 0);
    CHECK(fs::exists(out.path / "simulate.json"));
    CHECK(fs::exists(out.path / "simulate.csv"));
    const json report = read_json(out.path / "simulate.json");
    CHECK(report.at("rows").size() == 2);
    const double m4 = report.at("rows").back().at("m4").get<double>();
    CHECK(m4 > 2.5);
    CHECK(m4 < 3.5);
}
