#include "gfshock/config.hpp"

#include "gfshock/errors.hpp"
#include "gfshock/systems.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace gfshock::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> to_number(const std::string& text) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || end != t.data() + t.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, separator)) out.push_back(trim(item));
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) out += (out.empty() ? "" : ", ") + item;
    return out;
}

/// Reads typed values and collects every problem instead of stopping at the first.
class Reader {
public:
    explicit Reader(const std::map<std::string, Section>& document) : document_(document) {}

    std::vector<std::string> violations;

    std::optional<std::string> text(const std::string& section, const std::string& key, bool required) {
        const auto s = document_.find(section);
        if (s != document_.end()) {
            const auto k = s->second.find(key);
            if (k != s->second.end()) return k->second;
        }
        if (required) violations.push_back("missing key [" + section + "]." + key);
        return std::nullopt;
    }

    std::optional<double> number(const std::string& section, const std::string& key, bool required) {
        const auto raw = text(section, key, required);
        if (!raw) return std::nullopt;
        const auto value = to_number(*raw);
        if (!value) violations.push_back("[" + section + "]." + key + " = '" + *raw + "' is not a number");
        return value;
    }

    double number_or(const std::string& section, const std::string& key, double fallback) {
        return number(section, key, false).value_or(fallback);
    }

    std::optional<Eigen::Index> count(const std::string& section, const std::string& key, Eigen::Index minimum) {
        const auto value = number(section, key, true);
        if (!value) return std::nullopt;
        if (*value != std::floor(*value) || *value < double(minimum) || *value > 1e9) {
            violations.push_back("[" + section + "]." + key + " must be an integer >= " + std::to_string(minimum));
            return std::nullopt;
        }
        return static_cast<Eigen::Index>(*value);
    }

    std::optional<double> positive(const std::string& section, const std::string& key) {
        const auto value = number(section, key, true);
        if (value && !(*value > 0.0)) {
            violations.push_back("[" + section + "]." + key + " must be positive");
            return std::nullopt;
        }
        return value;
    }

    std::optional<std::vector<double>> list(const std::string& section, const std::string& key, bool required) {
        const auto raw = text(section, key, required);
        if (!raw) return std::nullopt;
        std::vector<double> out;
        for (const auto& item : split(*raw, ',')) {
            const auto value = to_number(item);
            if (!value) {
                violations.push_back("[" + section + "]." + key + " = '" + *raw + "' is not a list of numbers");
                return std::nullopt;
            }
            out.push_back(*value);
        }
        return out;
    }

private:
    const std::map<std::string, Section>& document_;
};

const std::map<std::string, std::vector<std::string>>& components_by_system() {
    static const std::map<std::string, std::vector<std::string>> table{
        {"burgers", {"u"}},
        {"k2", {"v", "u", "sigma"}},
        {"euler_split", {"rho", "u", "p"}},
        {"pressureless", {"rho", "u", "e"}},
        {"elasto", {"v", "u", "s", "p"}},
        {"hurricane", {"u", "v"}},
    };
    return table;
}

void check_physical(const Config& config, std::vector<std::string>& violations) {
    for (std::size_t k = 0; k < config.states.size(); ++k) {
        const Eigen::VectorXd& w = config.states[k];
        const std::string where = "[initial] state " + std::to_string(k) + ": ";
        if (config.system == "k2" && !(w(0) > 0.0)) violations.push_back(where + "v must be positive");
        if (config.system == "euler_split" && (!(w(0) > 0.0) || !(w(2) > 0.0)))
            violations.push_back(where + "rho and p must be positive");
        if (config.system == "pressureless" && !(w(0) >= 0.0)) violations.push_back(where + "rho must be >= 0");
        if (config.system == "elasto") {
            if (!(w(0) > 0.0) || !(w(3) > 0.0)) violations.push_back(where + "v and p must be positive");
            const auto s0 = config.params.find("s0");
            if (s0 != config.params.end() && std::abs(w(2)) > s0->second)
                violations.push_back(where + "|s| exceeds the yield cap s0");
        }
    }
}

}  // namespace

const std::vector<std::string>& known_systems() {
    static const std::vector<std::string> names{"burgers", "k2", "euler_split", "pressureless", "elasto", "hurricane"};
    return names;
}

std::vector<std::string> input_components(const std::string& system) {
    const auto& table = components_by_system();
    const auto it = table.find(system);
    if (it == table.end()) throw ConfigError({"unknown system '" + system + "'"});
    return it->second;
}

std::vector<std::string> required_params(const std::string& system) {
    if (system == "k2") return {"k"};
    if (system == "euler_split") return {"gamma"};
    if (system == "elasto") return {"gamma", "k", "s0"};
    if (system == "hurricane") return {"omega", "mu", "k"};
    return {};
}

Config parse_config(const std::string& text) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        std::istringstream stream(text);
        pt::read_ini(stream, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError({"line " + std::to_string(e.line()) + ": " + e.message()});
    }

    Config config;
    std::vector<std::string> early;
    static const std::set<std::string> sections{"scenario", "grid", "params", "initial", "output"};
    for (const auto& [name, section] : tree) {
        if (section.empty()) {
            early.push_back("key '" + name + "' appears outside any section");
            continue;
        }
        if (!sections.count(name)) early.push_back("unknown section [" + name + "]");
        for (const auto& [key, value] : section) config.document[name][key] = trim(value.data());
    }

    Reader read(config.document);
    read.violations = early;

    if (const auto system = read.text("scenario", "system", true)) {
        config.system = *system;
        if (std::find(known_systems().begin(), known_systems().end(), config.system) == known_systems().end())
            read.violations.push_back("unknown system '" + config.system + "' (known: " + join(known_systems()) + ")");
    }
    if (const auto end = read.number("scenario", "end_time", true)) {
        config.end_time = *end;
        if (!(*end >= 0.0)) read.violations.push_back("[scenario].end_time must be >= 0");
    }
    if (const auto cfl = read.number("scenario", "cfl", true)) {
        config.cfl = *cfl;
        if (!(*cfl > 0.0 && *cfl <= 0.5)) {
            std::ostringstream msg;
            msg << "[scenario].cfl = " << *cfl
                << " is outside (0, 0.5]: the CFL rule r * max|c| <= 1/2 keeps the discontinuities of "
                   "neighbouring interfaces from meeting inside a cell";
            read.violations.push_back(msg.str());
        }
    }
    if (const auto cap = read.number("scenario", "dt_cap", false)) {
        config.dt_cap = *cap;
        if (!(*cap > 0.0)) read.violations.push_back("[scenario].dt_cap must be positive");
    }
    if (const auto boundary = read.text("scenario", "boundary", false)) {
        if (*boundary == "reflective")
            config.boundary = godunov::Boundary::Reflective;
        else if (*boundary != "outflow")
            read.violations.push_back("[scenario].boundary must be outflow or reflective");
    }

    const bool known = components_by_system().count(config.system) != 0;
    for (const auto& key : known ? required_params(config.system) : std::vector<std::string>{}) {
        if (const auto value = read.number("params", key, true)) config.params[key] = *value;
    }
    if (const auto section = config.document.find("params"); section != config.document.end())
        for (const auto& [key, raw] : section->second)
            if (!config.params.count(key) && key != "schedule") {
                if (const auto value = to_number(raw)) config.params[key] = *value;
                else read.violations.push_back("[params]." + key + " = '" + raw + "' is not a number");
            }
    if (config.params.count("gamma") && !(config.params["gamma"] > 1.0))
        read.violations.push_back("[params].gamma must exceed 1");
    for (const char* key : {"k", "s0"})
        if (config.system != "hurricane" && config.params.count(key) && !(config.params[key] > 0.0))
            read.violations.push_back(std::string("[params].") + key + " must be positive");
    if (config.system == "hurricane")
        for (const char* key : {"mu", "k"})
            if (config.params.count(key) && !(config.params[key] >= 0.0))
                read.violations.push_back(std::string("[params].") + key + " must be >= 0");

    if (config.system == "hurricane") {
        config.nx = read.count("grid", "nx", 2).value_or(0);
        config.ny = read.count("grid", "ny", 2).value_or(0);
        config.dx = read.positive("grid", "dx").value_or(0.0);
        config.dy = read.positive("grid", "dy").value_or(0.0);
        config.x0 = read.number_or("grid", "x0", 0.0);
        config.y0 = read.number_or("grid", "y0", 0.0);
        if (const auto section = config.document.find("initial"); section != config.document.end())
            config.vortex = section->second;
        const std::string kind = config.vortex.count("vortex") ? config.vortex["vortex"] : "none";
        std::vector<std::string> needed;
        if (kind == "ring") needed = {"eye_radius", "outer_radius", "speed"};
        else if (kind == "smooth") needed = {"radius", "speed"};
        else if (kind == "solid") needed = {"rate"};
        else if (kind != "none") read.violations.push_back("[initial].vortex must be ring, smooth, solid or none");
        for (const auto& key : needed) read.number("initial", key, true);
        for (const char* key : {"center_x", "center_y"}) read.number("initial", key, false);
        if (const auto schedule = read.text("params", "schedule", false)) {
            for (const auto& entry : split(*schedule, ';')) {
                if (entry.empty()) continue;
                const auto colon = entry.find(':');
                bool ok = colon != std::string::npos && to_number(entry.substr(0, colon));
                if (ok) {
                    const auto values = split(entry.substr(colon + 1), ',');
                    ok = values.size() == 5 &&
                         std::all_of(values.begin(), values.end(), [](const std::string& v) { return to_number(v).has_value(); });
                }
                if (!ok)
                    read.violations.push_back("[params].schedule entry '" + entry +
                                              "' must read t: omega, mu, k, trade_u, trade_v");
            }
        }
    } else if (known) {
        config.n = read.count("grid", "n", 1).value_or(0);
        config.h = read.positive("grid", "h").value_or(0.0);
        config.x0 = read.number_or("grid", "x0", 0.0);

        const std::size_t dim = input_components(config.system).size();
        auto state = [&](const std::string& key) -> std::optional<Eigen::VectorXd> {
            const auto values = read.list("initial", key, true);
            if (!values) return std::nullopt;
            if (values->size() != dim) {
                read.violations.push_back("[initial]." + key + " needs " + std::to_string(dim) + " values (" +
                                          join(input_components(config.system)) + ")");
                return std::nullopt;
            }
            return Eigen::Map<const Eigen::VectorXd>(values->data(), Eigen::Index(dim));
        };
        if (read.text("initial", "breaks", false)) {
            config.breaks = read.list("initial", "breaks", true).value_or(std::vector<double>{});
            if (!std::is_sorted(config.breaks.begin(), config.breaks.end()) ||
                std::adjacent_find(config.breaks.begin(), config.breaks.end()) != config.breaks.end())
                read.violations.push_back("[initial].breaks must be strictly increasing");
            for (std::size_t k = 0; k <= config.breaks.size(); ++k)
                if (const auto w = state("state." + std::to_string(k))) config.states.push_back(*w);
        } else {
            const auto left = state("left");
            const auto right = state("right");
            const auto at = read.number("initial", "x0", true);
            if (left && right && at) {
                config.breaks = {*at};
                config.states = {*left, *right};
            }
        }
        if (config.states.size() == config.breaks.size() + 1) check_physical(config, read.violations);
    }

    if (read.text("output", "times", false))
        config.output_times = read.list("output", "times", true).value_or(std::vector<double>{});
    for (double t : config.output_times)
        if (!(t >= 0.0)) read.violations.push_back("[output].times must be >= 0");
    if (const auto directory = read.text("output", "directory", false)) config.output_directory = *directory;

    if (!read.violations.empty()) throw ConfigError(read.violations);
    return config;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot read config file '" + path + "'"});
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"burgers_shock",    "sod_split",     "k2_shock",
                                                "elasto_precursor", "elasto_merged", "hurricane_ring"};
    return names;
}

std::string preset_text(const std::string& name) {
    if (name == "burgers_shock")
        return "[scenario]\nsystem = burgers\nend_time = 0.5\ncfl = 0.4\n"
               "[grid]\nn = 200\nh = 0.005\n"
               "[initial]\nleft = 1\nright = 0\nx0 = 0.3\n"
               "[output]\ntimes = 0, 0.25, 0.5\ndirectory = out/burgers_shock\n";
    if (name == "sod_split")
        return "[scenario]\nsystem = euler_split\nend_time = 0.2\ncfl = 0.4\n"
               "[grid]\nn = 400\nh = 0.0025\n"
               "[params]\ngamma = 1.4\n"
               "[initial]\nleft = 1, 0, 1\nright = 0.125, 0, 0.1\nx0 = 0.5\n"
               "[output]\ntimes = 0, 0.1, 0.2\ndirectory = out/sod_split\n";
    if (name == "k2_shock")
        return "[scenario]\nsystem = k2\nend_time = 0.2\ncfl = 0.4\n"
               "[grid]\nn = 400\nh = 0.005\nx0 = -1\n"
               "[params]\nk = 2\n"
               "[initial]\nleft = 1, 0.5, 0\nright = 1, -0.5, 0\nx0 = 0\n"
               "[output]\ntimes = 0, 0.1, 0.2\ndirectory = out/k2_shock\n";
    if (name == "elasto_precursor")
        return "[scenario]\nsystem = elasto\nend_time = 0.25\ncfl = 0.4\n"
               "[grid]\nn = 800\nh = 0.0025\nx0 = -1\n"
               "[params]\ngamma = 3\nk = 2\ns0 = 0.5\n"
               "[initial]\nleft = 1, 0.5, 0, 1\nright = 1, -0.5, 0, 1\nx0 = 0\n"
               "[output]\ntimes = 0, 0.125, 0.25\ndirectory = out/elasto_precursor\n";
    if (name == "elasto_merged")
        return "[scenario]\nsystem = elasto\nend_time = 0.2\ncfl = 0.4\n"
               "[grid]\nn = 800\nh = 0.0025\nx0 = -1\n"
               "[params]\ngamma = 3\nk = 2\ns0 = 0.5\n"
               "[initial]\nleft = 1, 2, 0, 1\nright = 1, -2, 0, 1\nx0 = 0\n"
               "[output]\ntimes = 0, 0.1, 0.2\ndirectory = out/elasto_merged\n";
    if (name == "hurricane_ring")
        return "[scenario]\nsystem = hurricane\nend_time = 1\ncfl = 0.5\n"
               "[grid]\nnx = 121\nny = 121\ndx = 0.025\ndy = 0.025\nx0 = -1.5\ny0 = -1.5\n"
               "[params]\nomega = 1\nmu = 0.2\nk = 0.2\ntrade_u = 0.3\ntrade_v = 0.1\n"
               "[initial]\nvortex = ring\ncenter_x = -0.3\ncenter_y = 0\neye_radius = 0.15\n"
               "outer_radius = 0.6\nspeed = 1\n"
               "[output]\ntimes = 0, 0.5, 1\ndirectory = out/hurricane_ring\n";
    throw ConfigError({"unknown preset '" + name + "' (known: " + join(preset_names()) + ")"});
}

godunov::Scenario build_scenario(const Config& config) {
    using namespace systems;
    if (config.system == "hurricane") throw ConfigError({"hurricane scenarios run on the wind-field integrator"});
    const auto param = [&](const char* key) { return config.params.at(key); };

    godunov::Scenario scenario;
    scenario.system = config.system;
    if (config.system == "burgers") {
        scenario.solvers = {std::make_shared<BurgersSolver>()};
    } else if (config.system == "k2") {
        scenario.solvers = {std::make_shared<K2Solver>(param("k"))};
    } else if (config.system == "euler_split") {
        scenario.solvers = {std::make_shared<PressurelessSolver>(), std::make_shared<PressureStepSolver>(param("gamma"))};
    } else if (config.system == "pressureless") {
        scenario.solvers = {std::make_shared<PressurelessSolver>()};
    } else if (config.system == "elasto") {
        const ElastoParams params{param("gamma"), param("k"), param("s0")};
        scenario.solvers = {std::make_shared<ElastoTransportSolver>(), std::make_shared<ElastoForceSolver>(params)};
    } else {
        throw ConfigError({"unknown system '" + config.system + "'"});
    }

    auto to_solver = [&](const Eigen::VectorXd& w) -> Eigen::VectorXd {
        if (config.system == "euler_split")
            return EulerState::from_pressure(w(0), w(1), w(2), param("gamma")).conservative();
        if (config.system == "pressureless") return EulerState{w(0), w(1), w(2)}.conservative();
        return w;
    };
    const Eigen::Index dim = scenario.solvers.front()->dimension();
    scenario.initial = godunov::Grid1D::uniform(config.n, dim, config.h, config.x0);
    for (Eigen::Index i = 0; i < config.n; ++i) {
        const double x = scenario.initial.center(i);
        const auto segment = std::upper_bound(config.breaks.begin(), config.breaks.end(), x) - config.breaks.begin();
        scenario.initial.states.col(i) = to_solver(config.states[static_cast<std::size_t>(segment)]);
    }
    scenario.end_time = config.end_time;
    scenario.cfl = config.cfl;
    scenario.dt_cap = config.dt_cap > 0.0 ? config.dt_cap : std::numeric_limits<double>::infinity();
    scenario.boundary = config.boundary;
    scenario.output_times = config.output_times;
    return scenario;
}

HurricaneSetup build_hurricane(const Config& config) {
    if (config.system != "hurricane") throw ConfigError({"not a hurricane scenario"});
    const auto param_or = [&](const char* key, double fallback) {
        const auto it = config.params.find(key);
        return it == config.params.end() ? fallback : it->second;
    };
    const auto vortex_number = [&](const char* key, double fallback) {
        const auto it = config.vortex.find(key);
        return it == config.vortex.end() ? fallback : *to_number(it->second);
    };

    HurricaneSetup setup;
    setup.params.base = {param_or("omega", 0.0), param_or("mu", 0.0), param_or("k", 0.0),
                         Eigen::Vector2d(param_or("trade_u", 0.0), param_or("trade_v", 0.0))};
    if (const auto section = config.document.find("params"); section != config.document.end()) {
        if (const auto raw = section->second.find("schedule"); raw != section->second.end()) {
            for (const auto& entry : split(raw->second, ';')) {
                if (entry.empty()) continue;
                const auto colon = entry.find(':');
                const auto values = split(entry.substr(colon + 1), ',');
                hurricane::Coefficients c{*to_number(values[0]), *to_number(values[1]), *to_number(values[2]),
                                          Eigen::Vector2d(*to_number(values[3]), *to_number(values[4]))};
                setup.params.schedule.emplace_back(*to_number(entry.substr(0, colon)), c);
            }
            std::stable_sort(setup.params.schedule.begin(), setup.params.schedule.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }
    setup.params.validate();

    setup.initial = hurricane::WindField::uniform(config.nx, config.ny, config.dx, config.dy, config.x0, config.y0);
    hurricane::fill_trade(setup.initial, setup.params.base.trade);
    const Eigen::Vector2d center(vortex_number("center_x", 0.0), vortex_number("center_y", 0.0));
    const auto kind = config.vortex.count("vortex") ? config.vortex.at("vortex") : std::string("none");
    if (kind == "ring")
        hurricane::add_ring_vortex(setup.initial, center, vortex_number("eye_radius", 0.0),
                                   vortex_number("outer_radius", 0.0), vortex_number("speed", 0.0));
    else if (kind == "smooth")
        hurricane::add_smooth_vortex(setup.initial, center, vortex_number("radius", 0.0), vortex_number("speed", 0.0));
    else if (kind == "solid")
        hurricane::add_solid_body(setup.initial, center, vortex_number("rate", 0.0));

    // fixed step from the initial peak speed
    const double speed = setup.initial.max_speed();
    double dt = speed > 0.0 ? config.cfl * std::min(config.dx, config.dy) / speed : config.end_time;
    if (config.dt_cap > 0.0) dt = std::min(dt, config.dt_cap);
    setup.dt = dt > 0.0 ? dt : 1.0;
    return setup;
}

}  // namespace gfshock::cli
