#pragma once

/// Sectioned key = value scenario files.
///
///   [scenario]  system, end_time, cfl, boundary (outflow | reflective), dt_cap
///   [grid]      n, h, x0                      (1D systems)
///               nx, ny, dx, dy, x0, y0        (hurricane)
///   [params]    system specific, see required_params()
///   [initial]   left, right, x0  or  breaks, state.0 .. state.N   (1D systems)
///               vortex (ring | smooth | solid | none) and its keys (hurricane)
///   [output]    times, directory

#include "gfshock/godunov.hpp"
#include "gfshock/hurricane.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gfshock::cli {

using Section = std::map<std::string, std::string>;

struct Config {
    std::map<std::string, Section> document;  ///< every key as written, for the manifest

    std::string system;
    double end_time = 0.0;
    double cfl = 0.0;
    double dt_cap = 0.0;  ///< 0: no cap
    godunov::Boundary boundary = godunov::Boundary::Outflow;

    Eigen::Index n = 0;
    double h = 0.0;
    double x0 = 0.0;
    Eigen::Index nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0, y0 = 0.0;

    std::map<std::string, double> params;

    /// Piecewise-constant data: states.size() == breaks.size() + 1, in input variables.
    std::vector<double> breaks;
    std::vector<Eigen::VectorXd> states;
    Section vortex;

    std::vector<double> output_times;
    std::string output_directory = "out";

    std::size_t interfaces() const { return breaks.size(); }
};

/// burgers, k2, euler_split, pressureless, elasto, hurricane
const std::vector<std::string>& known_systems();
/// Names of the [initial] state components, e.g. rho,u,p for euler_split.
std::vector<std::string> input_components(const std::string& system);
std::vector<std::string> required_params(const std::string& system);

/// Parses and validates; throws ConfigError listing every violation found.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

/// INI text of a named preset; throws ConfigError for unknown names.
std::string preset_text(const std::string& name);
const std::vector<std::string>& preset_names();

/// Godunov scenario of a 1D system, with the initial data in solver variables.
godunov::Scenario build_scenario(const Config& config);

struct HurricaneSetup {
    hurricane::WindField initial;
    hurricane::HurricaneParams params;
    double dt = 0.0;
};
HurricaneSetup build_hurricane(const Config& config);

}  // namespace gfshock::cli
