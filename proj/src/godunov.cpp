#include "gfshock/godunov.hpp"

#include "gfshock/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gfshock::godunov {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd ghost(const MatrixXd& q, Index edge, const RiemannSolver& solver, Boundary boundary) {
    VectorXd g = q.col(edge);
    if (boundary == Boundary::Reflective)
        for (Index k : solver.odd_components()) g(k) = -g(k);
    return g;
}

/// Fans at the cells + 1 interfaces; interface i separates cells i - 1 and i.
std::vector<RiemannFan> interface_fans(const MatrixXd& q, const RiemannSolver& solver, Boundary boundary) {
    const Index n = q.cols();
    if (n == 0) throw InvalidArgument("grid has no cells");
    if (q.rows() != solver.dimension())
        throw InvalidArgument("grid dimension does not match the " + solver.name() + " solver");
    std::vector<RiemannFan> fans;
    fans.reserve(static_cast<std::size_t>(n + 1));
    fans.push_back(solver.solve(ghost(q, 0, solver, boundary), q.col(0)));
    for (Index i = 1; i < n; ++i) fans.push_back(solver.solve(q.col(i - 1), q.col(i)));
    fans.push_back(solver.solve(q.col(n - 1), ghost(q, n - 1, solver, boundary)));
    return fans;
}

}  // namespace

Grid1D Grid1D::uniform(Index cells, Index dimension, double h, double x0) {
    if (!(h > 0.0)) throw InvalidArgument("cell width must be positive");
    Grid1D grid;
    grid.h = h;
    grid.x0 = x0;
    grid.states = MatrixXd::Zero(dimension, cells);
    grid.point_masses = MatrixXd::Zero(dimension, cells);
    return grid;
}

VectorXd Grid1D::total() const {
    VectorXd out = h * states.rowwise().sum();
    if (point_masses.size() != 0) out += point_masses.rowwise().sum();
    return out;
}

MatrixXd Grid1D::folded_states() const {
    if (point_masses.size() == 0) return states;
    return states + point_masses / h;
}

double cfl_dt(const Grid1D& grid, const RiemannSolver& solver, double r, double cap, Boundary boundary) {
    if (!(r > 0.0) || r > 0.5) throw InvalidArgument("CFL number must lie in (0, 1/2]");
    double speed = 0.0;
    for (const auto& fan : interface_fans(grid.folded_states(), solver, boundary))
        speed = std::max(speed, fan.max_abs_speed());
    if (speed < 1e-12) return cap;
    return std::min(cap, r * grid.h / speed);
}

Grid1D godunov_step(const Grid1D& grid, const RiemannSolver& solver, double dt, Boundary boundary) {
    if (!(dt >= 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be finite and nonnegative");
    const MatrixXd q = grid.folded_states();
    const Index n = q.cols();
    const std::vector<RiemannFan> fans = interface_fans(q, solver, boundary);

    for (std::size_t i = 0; i < fans.size(); ++i) {
        const double reach = fans[i].max_abs_speed() * dt;
        if (reach > 0.5 * grid.h * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << solver.name() << ": fan at interface " << i << " reaches " << reach
                << " in one step, more than h/2 = " << 0.5 * grid.h;
            throw CflViolation(msg.str());
        }
    }

    const double r = dt / grid.h;
    Grid1D out;
    out.h = grid.h;
    out.x0 = grid.x0;
    out.time = grid.time + dt;
    out.states.resize(q.rows(), n);
    out.point_masses = MatrixXd::Zero(q.rows(), n);

    for (Index i = 0; i < n; ++i) {
        const RiemannFan& from_left = fans[static_cast<std::size_t>(i)];
        const RiemannFan& from_right = fans[static_cast<std::size_t>(i + 1)];
        VectorXd acc = VectorXd::Zero(q.rows());

        double reach_left = 0.0;
        for (const auto& wave : from_left.waves) {
            if (!(wave.speed > 0.0)) continue;
            acc += (r * (wave.speed - reach_left)) * wave.left;
            reach_left = wave.speed;
        }
        double reach_right = 0.0;
        for (const auto& wave : from_right.waves)
            if (wave.speed < 0.0) {
                reach_right = wave.speed;
                break;
            }
        acc += (1.0 - r * reach_left + r * reach_right) * q.col(i);
        const auto& right_waves = from_right.waves;
        for (std::size_t k = 0; k < right_waves.size(); ++k) {
            if (!(right_waves[k].speed < 0.0)) break;
            const double next = k + 1 < right_waves.size() ? std::min(right_waves[k + 1].speed, 0.0) : 0.0;
            acc += (r * (next - right_waves[k].speed)) * right_waves[k].right;
        }
        out.states.col(i) = acc;
    }

    for (Index i = 0; i <= n; ++i) {
        const auto& delta = fans[static_cast<std::size_t>(i)].delta;
        if (!delta) continue;
        const VectorXd amount = delta->rates * dt;
        if (delta->speed > 0.0) {
            if (i < n) out.point_masses.col(i) += amount;
        } else if (delta->speed < 0.0) {
            if (i > 0) out.point_masses.col(i - 1) += amount;
        } else {
            if (i < n) out.point_masses.col(i) += 0.5 * amount;
            if (i > 0) out.point_masses.col(i - 1) += 0.5 * amount;
        }
    }
    return out;
}

Grid1D split_step(const Grid1D& grid, const RiemannSolver& first, const RiemannSolver& second, double dt,
                  Boundary boundary) {
    Grid1D half = godunov_step(grid, first, dt, boundary);
    half.time = grid.time;
    return godunov_step(half, second, dt, boundary);
}

VectorXd burgers_reference_step(const VectorXd& u, double r) {
    const Index n = u.size();
    VectorXd out(n);
    auto at = [&](Index i) { return u(std::clamp<Index>(i, 0, n - 1)); };
    for (Index i = 0; i < n; ++i) {
        const double um = at(i - 1);
        const double u0 = u(i);
        const double up = at(i + 1);
        // an interface without a jump carries no discontinuity
        const double ci = um == u0 ? 0.0 : (um + u0) / 2;
        const double cn = u0 == up ? 0.0 : (u0 + up) / 2;
        if (ci >= 0 && cn >= 0) {
            out(i) = r * ci * um + (1 - r * ci) * u0;
        } else if (ci <= 0 && cn <= 0) {
            out(i) = (1 + r * cn) * u0 - r * cn * up;
        } else if (ci <= 0 && cn >= 0) {
            out(i) = u0;
        } else {
            out(i) = r * ci * um + (1 - r * ci + r * cn) * u0 - r * cn * up;
        }
    }
    return out;
}

Grid2D Grid2D::uniform(Index nx, Index ny, Index dimension, double dx, double dy, double x0, double y0) {
    if (!(dx > 0.0) || !(dy > 0.0)) throw InvalidArgument("grid spacings must be positive");
    Grid2D grid;
    grid.nx = nx;
    grid.ny = ny;
    grid.dx = dx;
    grid.dy = dy;
    grid.x0 = x0;
    grid.y0 = y0;
    grid.states = MatrixXd::Zero(dimension, nx * ny);
    return grid;
}

Grid2D dimensional_split_step(const Grid2D& grid, const RiemannSolver& along_x, const RiemannSolver& along_y,
                              double dt, Boundary boundary) {
    if (along_x.produces_point_masses() || along_y.produces_point_masses())
        throw InvalidArgument("dimensional splitting does not carry point masses");
    Grid2D out = grid;
    const Index dim = grid.states.rows();
    for (Index j = 0; j < grid.ny; ++j) {
        Grid1D row = Grid1D::uniform(grid.nx, dim, grid.dx, grid.x0);
        for (Index i = 0; i < grid.nx; ++i) row.states.col(i) = out.states.col(out.index(i, j));
        row = godunov_step(row, along_x, dt, boundary);
        for (Index i = 0; i < grid.nx; ++i) out.states.col(out.index(i, j)) = row.states.col(i);
    }
    for (Index i = 0; i < grid.nx; ++i) {
        Grid1D column = Grid1D::uniform(grid.ny, dim, grid.dy, grid.y0);
        for (Index j = 0; j < grid.ny; ++j) column.states.col(j) = out.states.col(out.index(i, j));
        column = godunov_step(column, along_y, dt, boundary);
        for (Index j = 0; j < grid.ny; ++j) out.states.col(out.index(i, j)) = column.states.col(j);
    }
    out.time = grid.time + dt;
    return out;
}

RunResult run(const Scenario& scenario) {
    if (scenario.solvers.empty()) throw InvalidArgument("scenario has no solver");
    if (!(scenario.end_time >= 0.0)) throw InvalidArgument("end time must be nonnegative");
    std::vector<double> times;
    for (double t : scenario.output_times)
        if (t <= scenario.end_time) times.push_back(std::max(t, 0.0));
    std::sort(times.begin(), times.end());

    RunResult result;
    Grid1D grid = scenario.initial;
    if (grid.point_masses.size() == 0) grid.point_masses = MatrixXd::Zero(grid.states.rows(), grid.states.cols());
    std::size_t next = 0;
    auto record = [&] {
        while (next < times.size() && times[next] <= grid.time) {
            if (result.snapshots.empty() || result.snapshots.back().time != grid.time)
                result.snapshots.push_back({grid.time, grid});
            ++next;
        }
    };
    record();

    while (grid.time < scenario.end_time) {
        double dt = scenario.dt_cap;
        for (const auto& solver : scenario.solvers)
            dt = std::min(dt, cfl_dt(grid, *solver, scenario.cfl, scenario.dt_cap, scenario.boundary));
        const double target = next < times.size() ? times[next] : scenario.end_time;
        const bool lands = grid.time + dt >= target;
        if (lands) dt = target - grid.time;

        const double start = grid.time;
        for (const auto& solver : scenario.solvers) {
            grid = godunov_step(grid, *solver, dt, scenario.boundary);
            grid.time = start;
        }
        grid.time = lands ? target : start + dt;
        ++result.steps;
        record();
    }
    if (result.snapshots.empty() || result.snapshots.back().time != grid.time)
        result.snapshots.push_back({grid.time, grid});
    return result;
}

void write_csv(std::ostream& out, const Grid1D& grid, const std::vector<std::string>& component_names) {
    std::vector<std::string> names = component_names;
    for (Index k = static_cast<Index>(names.size()); k < grid.dimension(); ++k) names.push_back("w" + std::to_string(k));

    out << "x";
    for (Index k = 0; k < grid.dimension(); ++k) out << ',' << names[static_cast<std::size_t>(k)];
    for (Index k = 0; k < grid.dimension(); ++k) out << ",ledger_" << names[static_cast<std::size_t>(k)];
    out << '\n';
    out << std::setprecision(17);
    for (Index i = 0; i < grid.cells(); ++i) {
        out << grid.center(i);
        for (Index k = 0; k < grid.dimension(); ++k) out << ',' << grid.states(k, i);
        for (Index k = 0; k < grid.dimension(); ++k)
            out << ',' << (grid.point_masses.size() != 0 ? grid.point_masses(k, i) : 0.0);
        out << '\n';
    }
}

}  // namespace gfshock::godunov
