#pragma once

#include "gfshock/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfshock::cli {

inline constexpr const char* kVersion = "1.0.0";

struct RunReport {
    std::string directory;
    std::vector<std::string> files;  ///< snapshots, then manifest.json and plot.gp
    long steps = 0;
    double wall_seconds = 0.0;
};

/// GFSHOCK_OUT if set, else the override, else [output].directory.
std::string output_directory(const Config& config, const std::optional<std::string>& override_directory = {});

/// Runs the scenario and writes <system>_t<time>.csv snapshots, manifest.json
/// and plot.gp (plus hurricane_eye_track.csv for the hurricane).
RunReport run_scenario(const Config& config, const std::optional<std::string>& override_directory = {});

}  // namespace gfshock::cli
