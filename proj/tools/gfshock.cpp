#include "gfshock/config.hpp"
#include "gfshock/errors.hpp"
#include "gfshock/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kConfigError = 2;
constexpr int kSolverAbort = 3;

void print_violations(const gfshock::ConfigError& e) {
    std::cerr << "config error:\n";
    for (const auto& v : e.violations()) std::cerr << "  - " << v << '\n';
}

int execute(const gfshock::cli::Config& config, const std::optional<std::string>& out) {
    try {
        const auto report = gfshock::cli::run_scenario(config, out);
        std::cout << "wrote " << report.files.size() << " files to " << report.directory << " (" << report.steps
                  << " steps)\n";
        return 0;
    } catch (const gfshock::ConfigError& e) {
        print_violations(e);
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "solver abort: " << e.what() << '\n';
        return kSolverAbort;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Godunov schemes with generalized-function jump conditions"};
    app.set_version_flag("--version", std::string("gfshock ") + gfshock::cli::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("config", config_path, "scenario file")->required();

    std::string preset;
    std::string out_dir;
    auto* preset_cmd = app.add_subcommand("preset", "run a named preset");
    preset_cmd->add_option("name", preset, "preset name")->required();
    preset_cmd->add_option("--out", out_dir, "output directory");

    auto* validate = app.add_subcommand("validate", "check a scenario file");
    validate->add_option("config", config_path, "scenario file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return execute(gfshock::cli::load_config(config_path), std::nullopt);
        if (*preset_cmd) {
            const auto config = gfshock::cli::parse_config(gfshock::cli::preset_text(preset));
            return execute(config, out_dir.empty() ? std::nullopt : std::optional<std::string>(out_dir));
        }
        if (*validate) {
            const auto config = gfshock::cli::load_config(config_path);
            std::cout << config_path << ": ok (" << config.system << ")\n";
            return 0;
        }
    } catch (const gfshock::ConfigError& e) {
        print_violations(e);
        return kConfigError;
    }
    return 0;
}
