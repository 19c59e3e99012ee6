#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gfshock/config.hpp"
#include "gfshock/errors.hpp"
#include "gfshock/runner.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace gfshock;
namespace fs = std::filesystem;

namespace {

const char* kMinimal =
    "[scenario]\nsystem = burgers\nend_time = 0.1\ncfl = 0.4\n"
    "[grid]\nn = 50\nh = 0.02\n"
    "[initial]\nleft = 1\nright = 0\nx0 = 0.3\n"
    "[output]\ntimes = 0.05\n";

std::string violations_of(const std::string& text) {
    try {
        cli::parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("gfshock_test_" + name);
    fs::remove_all(dir);
    return dir;
}

int exit_code(const std::string& args) {
    const std::string command = std::string(GFSHOCK_TOOL) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("minimal burgers config") {
    const auto c = cli::parse_config(kMinimal);
    CHECK(c.system == "burgers");
    CHECK(c.interfaces() == 1);
    CHECK(c.states.size() == 2);
    CHECK(c.states[0](0) == 1.0);
    const auto s = cli::build_scenario(c);
    CHECK(s.initial.cells() == 50);
}

TEST_CASE("config violations") {
    std::string text = kMinimal;
    text.replace(text.find("cfl = 0.4"), 9, "cfl = 0.9");
    const std::string cfl = violations_of(text);
    CHECK(cfl.find("r * max|c| <= 1/2") != std::string::npos);

    const std::string euler =
        "[scenario]\nsystem = euler_split\nend_time = 0.1\ncfl = 0.4\n[grid]\nn = 10\nh = 0.1\n"
        "[initial]\nleft = 1, 0, 1\nright = 0.1, 0, 0.1\nx0 = 0.5\n";
    CHECK(violations_of(euler).find("gamma") != std::string::npos);

    std::string unknown = kMinimal;
    unknown.replace(unknown.find("burgers"), 7, "navier");
    CHECK(violations_of(unknown).find("navier") != std::string::npos);

    std::string bad_number = kMinimal;
    bad_number.replace(bad_number.find("n = 50"), 6, "n = lots");
    CHECK(violations_of(bad_number).find("lots") != std::string::npos);

    // every violation is reported, not only the first
    std::string several = text;
    several.replace(several.find("n = 50"), 6, "n = lots");
    try {
        cli::parse_config(several);
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(e.violations().size() >= 2);
    }
}

TEST_CASE("presets parse") {
    for (const auto& name : cli::preset_names()) CHECK_NOTHROW(cli::parse_config(cli::preset_text(name)));
    CHECK_THROWS_AS(cli::preset_text("nothing"), ConfigError);
}

TEST_CASE("run writes snapshots, manifest and plot script deterministically") {
    const auto config = cli::parse_config(kMinimal);
    const fs::path a = scratch("a"), b = scratch("b");
    const auto report = cli::run_scenario(config, a.string());
    cli::run_scenario(config, b.string());
    CHECK(fs::exists(a / "manifest.json"));
    CHECK(fs::exists(a / "plot.gp"));
    int csvs = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const auto name = entry.path().filename().string();
        if (entry.path().extension() == ".csv") {
            ++csvs;
            CHECK(name.rfind("burgers_t", 0) == 0);
            CHECK(slurp(entry.path()) == slurp(b / name));
        }
    }
    CHECK(csvs == 2);
    const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
    CHECK(manifest["steps"].get<long>() == report.steps);
    CHECK(manifest.contains("wall_time_seconds"));
    CHECK(manifest["config"]["scenario"]["cfl"] == "0.4");
    CHECK(manifest["config"]["grid"]["h"] == "0.02");
}

TEST_CASE("GFSHOCK_OUT overrides the directory") {
    const auto config = cli::parse_config(kMinimal);
    const fs::path env = scratch("env");
    setenv("GFSHOCK_OUT", env.c_str(), 1);
    CHECK(cli::output_directory(config, std::string("/elsewhere")) == env.string());
    unsetenv("GFSHOCK_OUT");
    CHECK(cli::output_directory(config, std::string("/elsewhere")) == "/elsewhere");
    CHECK(cli::output_directory(config) == "out");
}

TEST_CASE("exit codes") {
    const fs::path dir = scratch("exit");
    fs::create_directories(dir);
    {
        std::ofstream(dir / "good.ini") << kMinimal;
        std::string bad = kMinimal;
        bad.replace(bad.find("cfl = 0.4"), 9, "cfl = 0.9");
        std::ofstream(dir / "bad.ini") << bad;
        // strong expansion opens a vacuum, which the pressure step cannot handle
        std::ofstream(dir / "abort.ini")
            << "[scenario]\nsystem = euler_split\nend_time = 0.1\ncfl = 0.4\n[grid]\nn = 10\nh = 0.1\n"
               "[params]\ngamma = 1.4\n[initial]\nleft = 1, -10, 1\nright = 1, 10, 1\nx0 = 0.5\n[output]\ndirectory = "
            << (dir / "out").string() << "\n";
    }
    CHECK(exit_code("--version") == 0);
    CHECK(exit_code("validate " + (dir / "good.ini").string()) == 0);
    CHECK(exit_code("validate " + (dir / "bad.ini").string()) == 2);
    CHECK(exit_code("run " + (dir / "abort.ini").string()) == 3);
    CHECK(exit_code("preset burgers_shock --out " + (dir / "preset").string()) == 0);
    CHECK(fs::exists(dir / "preset" / "manifest.json"));
}
