#pragma once

/// Godunov finite-volume engine: exact Riemann fans at every interface followed
/// by projection onto cell averages.

#include "gfshock/riemann_fan.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace gfshock::godunov {

enum class Boundary { Outflow, Reflective };

/// Cell i covers [x0 + i h, x0 + (i + 1) h].
struct Grid1D {
    double h = 1.0;
    double x0 = 0.0;
    double time = 0.0;
    Eigen::MatrixXd states;        ///< dimension x cells
    Eigen::MatrixXd point_masses;  ///< dimension x cells: deposits of the last step, not yet averaged

    static Grid1D uniform(Eigen::Index cells, Eigen::Index dimension, double h, double x0 = 0.0);

    Eigen::Index cells() const { return states.cols(); }
    Eigen::Index dimension() const { return states.rows(); }
    double center(Eigen::Index i) const { return x0 + (double(i) + 0.5) * h; }
    /// h * sum of states plus every ledger entry.
    Eigen::VectorXd total() const;
    /// States with the ledger folded into the averages.
    Eigen::MatrixXd folded_states() const;
};

/// Largest stable step r h / max |speed|, capped; the cap is returned when every
/// fan is at rest (max speed below 1e-12).
double cfl_dt(const Grid1D& grid, const RiemannSolver& solver, double r,
              double cap = std::numeric_limits<double>::infinity(), Boundary boundary = Boundary::Outflow);

/// One Godunov step.  Ledger entries from the previous step are folded in first;
/// point masses created during this step go to the ledger of the cell holding
/// the end position (half to each neighbour if the point mass is at rest).
/// Throws CflViolation if a fan spans more than h / 2.
Grid1D godunov_step(const Grid1D& grid, const RiemannSolver& solver, double dt,
                    Boundary boundary = Boundary::Outflow);

/// godunov_step with `second` applied to the result of `first`.
Grid1D split_step(const Grid1D& grid, const RiemannSolver& first, const RiemannSolver& second, double dt,
                  Boundary boundary = Boundary::Outflow);

/// The four-case scalar Burgers update with r = dt / h and outflow ghosts.
Eigen::VectorXd burgers_reference_step(const Eigen::VectorXd& u, double r);

/// Cell-centered 2D grid; node (i, j) is column i + nx * j of states.
struct Grid2D {
    Eigen::Index nx = 0;
    Eigen::Index ny = 0;
    double dx = 1.0;
    double dy = 1.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double time = 0.0;
    Eigen::MatrixXd states;

    static Grid2D uniform(Eigen::Index nx, Eigen::Index ny, Eigen::Index dimension, double dx, double dy,
                          double x0 = 0.0, double y0 = 0.0);
    Eigen::Index index(Eigen::Index i, Eigen::Index j) const { return i + nx * j; }
};

/// Dimensional splitting: 1D steps along every row with `along_x`, then along
/// every column with `along_y`, both over dt.
Grid2D dimensional_split_step(const Grid2D& grid, const RiemannSolver& along_x, const RiemannSolver& along_y,
                              double dt, Boundary boundary = Boundary::Outflow);

struct Scenario {
    std::string system;
    /// One solver, or two applied in sequence each step.
    std::vector<std::shared_ptr<const RiemannSolver>> solvers;
    Grid1D initial;
    double end_time = 0.0;
    double cfl = 0.4;
    double dt_cap = std::numeric_limits<double>::infinity();
    Boundary boundary = Boundary::Outflow;
    std::vector<double> output_times;
};

struct Snapshot {
    double time = 0.0;
    Grid1D grid;
};

struct RunResult {
    std::vector<Snapshot> snapshots;
    long steps = 0;
};

/// Steps to end_time, landing exactly on every requested output time; the final
/// state is always part of the result.
RunResult run(const Scenario& scenario);

/// Header "x,<components>,ledger_<components>" and one row per cell, 17 significant digits.
void write_csv(std::ostream& out, const Grid1D& grid, const std::vector<std::string>& component_names);

}  // namespace gfshock::godunov
