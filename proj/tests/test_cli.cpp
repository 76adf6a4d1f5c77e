#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "cutvol/classical.hpp"
#include "cutvol/json_io.hpp"
#include "cutvol/tube.hpp"

using namespace cutvol;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout; stderr is discarded.
RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Path to the built command-line binary, provided by the test harness.
std::string cli_path() {
    const char* cli = std::getenv("CUTVOL_CLI");
    if (cli == nullptr || *cli == '\0')
        return {};
    return std::string("\"") + cli + "\"";
}

std::filesystem::path fresh_temp_dir(const std::string& stem) {
    const auto dir = std::filesystem::temp_directory_path() /
                     (stem + "-" + std::to_string(getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

#define REQUIRE_CLI()                                             \
    const std::string cli = cli_path();                          \
    if (cli.empty())                                             \
        SKIP("CUTVOL_CLI not set; CLI integration tests need the built binary")

} // namespace

TEST_CASE("cli: exact tube polynomial as JSON") {
    REQUIRE_CLI();
    const RunResult r = run(cli + " tube-poly --k 2 --m 1 --eps 1/2");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("k") == 2);
    CHECK(j.at("epsilon") == "1/2");
    CHECK(j.at("cut_degree") == 3);
    CHECK(j.at("cut_poly").at("terms").size() == 3);
    CHECK(bipoly_from_json(j.at("dvdb")) == tube_dvdb(TubeSpec(2, 1, Rational(1, 2))));
    CHECK(bipoly_from_json(j.at("cut_poly")) ==
          tube_cut_poly(TubeSpec(2, 1, Rational(1, 2))));
}

TEST_CASE("cli: codimension-two tube reduces to one odd term") {
    REQUIRE_CLI();
    const RunResult r = run(cli + " tube-poly --k 1 --m 2 --eps 1/2");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    REQUIRE(j.at("cut_poly").at("terms").size() == 1);
    CHECK(j.at("cut_poly").at("terms").at(0).at("a") == 0);
    CHECK(j.at("cut_poly").at("terms").at(0).at("b") == 1);
}

TEST_CASE("cli: invalid radius or flags exit nonzero") {
    REQUIRE_CLI();
    CHECK(run(cli + " tube-poly --eps 3/2").exit_code != 0);
    CHECK(run(cli + " tube-poly --eps nonsense").exit_code != 0);
    CHECK(run(cli + " tube-poly --eps 1/0").exit_code != 0);
    CHECK(run(cli + " no-such-command").exit_code != 0);
    CHECK(run(cli).exit_code != 0);
    CHECK(run(cli + " tube-poly --format yaml").exit_code != 0);
    CHECK(run(cli + " fit").exit_code != 0); // --in is required
}

TEST_CASE("cli: byte-identical output for identical exact queries") {
    REQUIRE_CLI();
    const RunResult first = run(cli + " tube-poly --k 3 --m 2 --eps 1/4");
    const RunResult second = run(cli + " tube-poly --k 3 --m 2 --eps 1/4");
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
}

TEST_CASE("cli: quick verification run passes and flags low-power sampling") {
    REQUIRE_CLI();
    const RunResult r =
        run(cli + " verify --k-max 1 --m-max 1 --samples 1000 --seed 7");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("all_pass") == true);
    bool saw_skip = false;
    for (const auto& check : j.at("checks")) {
        CHECK((check.at("status") == "pass" || check.at("status") == "skipped"));
        if (check.at("status") == "skipped")
            saw_skip = true;
    }
    CHECK(saw_skip); // 1000 samples is below the power threshold

    SECTION("csv format emits one row per check") {
        const RunResult csv =
            run(cli + " verify --k-max 1 --m-max 1 --samples 1000 --seed 7 --format csv");
        REQUIRE(csv.exit_code == 0);
        CHECK(csv.output.rfind("name,status,deviation,threshold\n", 0) == 0);
    }
}

TEST_CASE("cli: classical ball section emits the exact cap polynomial") {
    REQUIRE_CLI();
    const RunResult r = run(cli + " classical --body ball --N 3");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("certificate") == "polynomial");
    CHECK(unipoly_from_json(j.at("cap_poly")) == ball_cap_poly(3));
}

TEST_CASE("cli: even-dimensional paraboloid carries the squared certificate") {
    REQUIRE_CLI();
    const RunResult r = run(cli + " classical --body paraboloid --N 4");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("certificate") == "square-is-polynomial");
    CHECK(j.at("volume").get<double>() > 0.0);
}

TEST_CASE("cli: even-dimensional ball needs an explicit height") {
    REQUIRE_CLI();
    CHECK(run(cli + " classical --body ball --N 4").exit_code != 0);
    const RunResult r = run(cli + " classical --body ball --N 4 --height 0.3");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("certificate") == "transcendental-suspected");
    CHECK(j.at("volume").get<double>() ==
          Catch::Approx(ball_cap(4, 0.3)).epsilon(1e-13));
}

TEST_CASE("cli: transcendental control curve defeats detection") {
    REQUIRE_CLI();
    const RunResult r = run(cli + " newton-demo --dmax 6 --points 80");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("detected") == "none");
    CHECK(j.at("residual_table").size() == 7);
}

TEST_CASE("cli: fit detects the degree of generated samples") {
    REQUIRE_CLI();
    const auto dir = fresh_temp_dir("cutvol-fit");
    const auto csv_path = dir / "cubic.csv";
    {
        std::ofstream csv(csv_path);
        csv << "x,value\n";
        csv.precision(17);
        for (int i = 0; i < 40; ++i) {
            const double x = -1.0 + 2.0 * i / 39.0;
            csv << x << "," << (x * x * x - 2.0 * x + 0.25) << "\n";
        }
    }
    const RunResult detect = run(cli + " fit --in " + csv_path.string() + " --dmax 8");
    REQUIRE(detect.exit_code == 0);
    const Json dj = Json::parse(detect.output);
    CHECK(dj.at("detected") == 3);

    const RunResult fixed =
        run(cli + " fit --in " + csv_path.string() + " --degree 3");
    REQUIRE(fixed.exit_code == 0);
    const Json fj = Json::parse(fixed.output);
    CHECK(fj.at("report").at("max_abs_residual").get<double>() < 1e-12);

    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: relative output paths land in the configured directory") {
    REQUIRE_CLI();
    const auto dir = fresh_temp_dir("cutvol-out");
    const RunResult r = run("CUTVOL_OUT_DIR=\"" + dir.string() + "\" " + cli +
                            " newton-demo --points 12 --dmax 2 --format csv --out sub/plot.csv");
    REQUIRE(r.exit_code == 0);
    const auto written = dir / "sub" / "plot.csv";
    REQUIRE(std::filesystem::exists(written));
    const std::string content = slurp(written);
    CHECK(content.rfind("b,value\n", 0) == 0);
    CHECK(std::count(content.begin(), content.end(), '\n') == 13); // header + 12 rows
    std::filesystem::remove_all(dir);
}
