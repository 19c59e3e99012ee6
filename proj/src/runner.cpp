#include "gfshock/runner.hpp"

#include "gfshock/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace gfshock::cli {

namespace fs = std::filesystem;

namespace {

std::string time_label(double t) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", t);
    return buffer;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

nlohmann::json document_json(const Config& config) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [name, section] : config.document)
        for (const auto& [key, value] : section) out[name][key] = value;
    return out;
}

void write_plot(const fs::path& path, const std::vector<std::string>& csvs, const std::vector<std::string>& columns,
                bool field) {
    std::ofstream out = open_output(path);
    out << "set datafile separator ','\nset key outside\n";
    if (field) {
        out << "set view map\n";
        for (const auto& csv : csvs)
            out << "set title '" << csv << "'\nsplot '" << csv << "' using 1:2:(sqrt($3**2+$4**2)) with points palette pt 5 ps 0.4 notitle\npause -1\n";
        return;
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << "set title '" << columns[c] << "'\nplot ";
        for (std::size_t k = 0; k < csvs.size(); ++k)
            out << (k ? ", " : "") << "'" << csvs[k] << "' using 1:" << c + 2 << " with lines title '" << csvs[k] << "'";
        out << "\npause -1\n";
    }
}

}  // namespace

std::string output_directory(const Config& config, const std::optional<std::string>& override_directory) {
    if (const char* env = std::getenv("GFSHOCK_OUT"); env && *env) return env;
    if (override_directory && !override_directory->empty()) return *override_directory;
    return config.output_directory;
}

RunReport run_scenario(const Config& config, const std::optional<std::string>& override_directory) {
    RunReport report;
    report.directory = output_directory(config, override_directory);
    const fs::path dir(report.directory);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + report.directory + ": " + ec.message());

    nlohmann::json manifest;
    manifest["generator"] = std::string("gfshock ") + kVersion;
    manifest["system"] = config.system;
    manifest["config"] = document_json(config);
    manifest["snapshots"] = nlohmann::json::array();

    std::vector<std::string> csvs;
    std::vector<std::string> columns;
    const auto start = std::chrono::steady_clock::now();

    if (config.system == "hurricane") {
        const HurricaneSetup setup = build_hurricane(config);
        const auto result = hurricane::run(setup.initial, setup.params, setup.dt, config.end_time, config.output_times);
        report.steps = result.steps;
        for (const auto& snapshot : result.snapshots) {
            const std::string name = "hurricane_t" + time_label(snapshot.time) + ".csv";
            std::ofstream out = open_output(dir / name);
            hurricane::write_field_csv(out, snapshot);
            csvs.push_back(name);
            manifest["snapshots"].push_back({{"time", snapshot.time}, {"file", name}});
        }
        const std::string track = "hurricane_eye_track.csv";
        std::ofstream out = open_output(dir / track);
        hurricane::write_track_csv(out, result.track);
        report.files = csvs;
        report.files.push_back(track);
        manifest["eye_track"] = track;
        manifest["derived"] = {{"dt", setup.dt}, {"nodes", config.nx * config.ny}};
        columns = {"u", "v"};
    } else {
        const godunov::Scenario scenario = build_scenario(config);
        const auto result = godunov::run(scenario);
        report.steps = result.steps;
        columns = scenario.solvers.front()->component_names();
        for (const auto& snapshot : result.snapshots) {
            const std::string name = config.system + "_t" + time_label(snapshot.time) + ".csv";
            std::ofstream out = open_output(dir / name);
            godunov::write_csv(out, snapshot.grid, columns);
            csvs.push_back(name);
            manifest["snapshots"].push_back({{"time", snapshot.time}, {"file", name}});
        }
        report.files = csvs;
        nlohmann::json solvers = nlohmann::json::array();
        for (const auto& solver : scenario.solvers) solvers.push_back(solver->name());
        manifest["derived"] = {{"cells", config.n}, {"solvers", solvers}, {"components", columns}};
    }

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    manifest["steps"] = report.steps;
    manifest["wall_time_seconds"] = report.wall_seconds;

    write_plot(dir / "plot.gp", csvs, columns, config.system == "hurricane");
    {
        std::ofstream out = open_output(dir / "manifest.json");
        out << manifest.dump(2) << '\n';
    }
    report.files.push_back("manifest.json");
    report.files.push_back("plot.gp");
    return report;
}

}  // namespace gfshock::cli
