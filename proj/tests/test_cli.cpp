#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CRLH_CLI_PATH
#error "CRLH_CLI_PATH must point at the built crlh binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;  // stdout only; stderr is routed to a scratch file
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path err_path =
        fs::temp_directory_path() / ("crlh_cli_stderr_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(CRLH_CLI_PATH) + " " + args + " 2>" + err_path.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    fs::remove(err_path);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string run_stderr(const std::string& args) {
    const fs::path err_path = fs::temp_directory_path() / "crlh_cli_stderr_capture.txt";
    const std::string cmd =
        std::string(CRLH_CLI_PATH) + " " + args + " >/dev/null 2>" + err_path.string();
    const int rc = std::system(cmd.c_str());
    (void)rc;  // exit status checked by run_cli callers
    std::ifstream in(err_path);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(err_path);
    return ss.str();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("eval above the calibrated threshold reports negative epsilon") {
    const RunResult r =
        run_cli("eval --preset fig3 --n 1 --fluct 1 --temp 200 --omega-ghz 2.9");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out.at("epsilon_eff").get<double>() < 0.0);
    CHECK(out.at("mu_eff").get<double>() < 0.0);
    CHECK(out.at("handedness") == "left_handed");
}

TEST_CASE("eval below the threshold flips the sign of epsilon") {
    const RunResult r =
        run_cli("eval --preset fig3 --n 1 --fluct 1 --temp 100 --omega-ghz 2.9");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("epsilon_eff").get<double>() > 0.0);
}

TEST_CASE("eval rejects a negative capacitance, naming the field") {
    const RunResult r = run_cli("eval --cl -1 --ll 1e-3 --cr 1e-3 --lr 1e-9 --temp 100 "
                                "--n 0 --fluct 1 --omega-ghz 2.9");
    CHECK(r.exit_code == 2);
    const std::string err = run_stderr("eval --cl -1 --ll 1e-3 --cr 1e-3 --lr 1e-9 --temp 100 "
                                       "--n 0 --fluct 1 --omega-ghz 2.9");
    CHECK(err.find("c_l") != std::string::npos);
}

TEST_CASE("eval with an enormous fluctuation approaches the bare capacitance") {
    const RunResult r =
        run_cli("eval --preset fig3 --n 1 --fluct 1e30 --temp 200 --omega-ghz 2.9");
    REQUIRE(r.exit_code == 0);
    const double eps = json::parse(r.out).at("epsilon_eff").get<double>();
    CHECK(std::fabs(eps - 9.0e-3) < 1e-6 * 9.0e-3);
}

TEST_CASE("eval requires a frequency") {
    const RunResult r = run_cli("eval --preset fig2 --temp 85");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bands on the frequency-sweep preset finds the 3e9 rad/s edge at 85 K") {
    const RunResult r = run_cli("bands --preset fig2 --temp 85");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    REQUIRE(out.at("crossings").size() == 1);
    const double loc = out["crossings"][0]["location"].get<double>();
    CHECK(std::fabs(loc - 3e9) < 1e-3 * 3e9);
}

TEST_CASE("threshold on the temperature-sweep preset lands near 170 K") {
    const RunResult r = run_cli("threshold --preset fig3 --n 1");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    REQUIRE(out.at("crossings").size() == 1);
    CHECK(std::fabs(out["crossings"][0]["location"].get<double>() - 170.0) < 0.1);
}

TEST_CASE("threshold with no crossing still exits 0 with an empty list") {
    const RunResult r = run_cli("threshold --preset fig3 --n 1 --t-lo 5 --t-hi 100");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("crossings").empty());
}

TEST_CASE("calibrate returns the micrometer-scale cell length") {
    const RunResult r = run_cli("calibrate --preset fig3 --n 1 --fluct 1 --temp 170 "
                                "--omega-ghz 2.9");
    REQUIRE(r.exit_code == 0);
    const double z0 = json::parse(r.out).at("z0").get<double>();
    CHECK(std::fabs(z0 - 1.7115832323776793e-06) < 1e-12);
}

TEST_CASE("every subcommand offers --help") {
    for (const char* sub : {"eval", "sweep", "bands", "threshold", "calibrate", "figure"}) {
        const RunResult r = run_cli(std::string(sub) + " --help");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("Usage") != std::string::npos);
    }
}

TEST_CASE("unknown flags exit with the usage code") {
    CHECK(run_cli("eval --does-not-exist 1").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
}

TEST_CASE("figure writes the dataset and reruns byte-identically") {
    const fs::path dir = fs::temp_directory_path() / "crlh_cli_figure_test";
    fs::create_directories(dir);
    const fs::path a = dir / "fig2_a.csv";
    const fs::path b = dir / "fig2_b.csv";
    REQUIRE(run_cli("figure fig2 -o " + a.string()).exit_code == 0);
    REQUIRE(run_cli("figure fig2 -o " + b.string()).exit_code == 0);
    const std::string content_a = read_file(a);
    CHECK(content_a == read_file(b));

    std::size_t lines = 0;
    for (char c : content_a) lines += c == '\n';
    CHECK(lines == 1 + 4 * 256);

    const std::string err = run_stderr("figure fig2 -o " + (dir / "fig2_c.csv").string());
    CHECK(err.find("calibrated z0") != std::string::npos);
    CHECK(err.find("series T=85") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("figure gnuplot output writes the script and its CSV sibling") {
    const fs::path dir = fs::temp_directory_path() / "crlh_cli_gnuplot_test";
    fs::create_directories(dir);
    const fs::path gp = dir / "fig3.gp";
    REQUIRE(run_cli("figure fig3 --format gnuplot -o " + gp.string()).exit_code == 0);
    CHECK(fs::exists(gp));
    REQUIRE(fs::exists(dir / "fig3.csv"));
    CHECK(read_file(gp).find("fig3.csv") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("stdout payloads are pure JSON with diagnostics on stderr") {
    const RunResult r = run_cli("threshold --preset fig3 --n 1");
    REQUIRE(r.exit_code == 0);
    CHECK_NOTHROW(json::parse(r.out));
}

TEST_CASE("config file drives a sweep and flags override it") {
    const fs::path dir = fs::temp_directory_path() / "crlh_cli_config_test";
    fs::create_directories(dir);
    const fs::path cfg_path = dir / "sweep.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({
            "preset": "fig3",
            "grid": {"lo": 10.0, "hi": 200.0, "count": 8, "spacing": "linear"},
            "series": [{"n": 1}, {"n": 3}],
            "convention": "paper_eq14"
        })";
    }
    const RunResult r = run_cli("sweep --config " + cfg_path.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out["spec"]["grid"]["count"].get<int>() == 8);
    CHECK(out["records"].size() == 2 * 8);
    CHECK(out["spec"]["grid"]["lo"].get<double>() == 10.0);

    // flag overrides the config grid count
    const RunResult r2 =
        run_cli("sweep --config " + cfg_path.string() + " --count 4 --format json");
    REQUIRE(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["records"].size() == 2 * 4);
    fs::remove_all(dir);
}

TEST_CASE("sweep with explicit parameters and no preset") {
    const RunResult r = run_cli(
        "sweep --cl 148e-6 --ll 595e-6 --cr 35e-3 --lr 480e-12 --z0 1e-6 --n 5 --fluct 25 "
        "--axis omega --lo 1e9 --hi 2e9 --count 4 --series-temp 35,85 --format json");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out["records"].size() == 8);
    CHECK(out["spec"]["params"]["z0"].get<double>() == 1e-6);
}

TEST_CASE("omega unit flags are mutually exclusive") {
    const RunResult r = run_cli("eval --preset fig3 --omega-ghz 2.9 --omega-rad-s 2.9e9");
    CHECK(r.exit_code == 2);
}
