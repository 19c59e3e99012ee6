#pragma once

/// Semi-Lagrangian integrator for a 2D wind field
///   u_t + u u_x + v u_y = (k - mu)(u - u*) + omega (v - v*)
///   v_t + u v_x + v v_y = (k - mu)(v - v*) - omega (u - u*)
/// with the linear source integrated exactly along each characteristic.

#include <Eigen/Dense>

#include <iosfwd>
#include <vector>

namespace gfshock::hurricane {

/// Velocity at the nodes (x0 + i dx, y0 + j dy); u(i, j), v(i, j).
struct WindField {
    Eigen::Index nx = 0;
    Eigen::Index ny = 0;
    double dx = 1.0;
    double dy = 1.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double time = 0.0;
    Eigen::MatrixXd u;
    Eigen::MatrixXd v;

    static WindField uniform(Eigen::Index nx, Eigen::Index ny, double dx, double dy, double x0 = 0.0,
                             double y0 = 0.0);

    double x(Eigen::Index i) const { return x0 + double(i) * dx; }
    double y(Eigen::Index j) const { return y0 + double(j) * dy; }
    /// Bilinear interpolation, with the point clamped to the node rectangle.
    Eigen::Vector2d at(double x, double y) const;
    double max_speed() const;
    void validate() const;
};

struct Coefficients {
    double omega = 0.0;
    double mu = 0.0;
    double k = 0.0;
    Eigen::Vector2d trade = Eigen::Vector2d::Zero();
};

struct HurricaneParams {
    Coefficients base;
    /// (start time, coefficients); each entry holds until the next one starts.
    std::vector<std::pair<double, Coefficients>> schedule;

    /// Coefficients in force at time t.
    const Coefficients& at(double t) const;
    /// Throws InvalidArgument if mu or k is negative anywhere.
    void validate() const;
};

/// Relative velocity scaled by exp((k - mu) dt) and rotated by -omega dt.
Eigen::Vector2d source_exact(const Eigen::Vector2d& velocity, const Coefficients& coefficients, double dt);

/// Departure point of the characteristic through (x, y): one midpoint iteration, clamped.
Eigen::Vector2d backtrack(const WindField& field, double x, double y, double dt);

/// Throws StabilityViolation if dt * max speed exceeds min(dx, dy).
WindField hurricane_step(const WindField& field, const HurricaneParams& params, double dt);

// Initial fields: trade wind plus a relative vortex turning counterclockwise.

/// Relative tangential speed `speed` for eye_radius < r < outer_radius, zero elsewhere.
void add_ring_vortex(WindField& field, Eigen::Vector2d center, double eye_radius, double outer_radius, double speed);
/// Smooth tangential profile speed * (r/R) exp((1 - (r/R)^2) / 2), peaking at r = R.
void add_smooth_vortex(WindField& field, Eigen::Vector2d center, double radius, double speed);
/// Rigid rotation with angular velocity rate about center.
void add_solid_body(WindField& field, Eigen::Vector2d center, double rate);
void fill_trade(WindField& field, const Eigen::Vector2d& trade);

struct EyeSample {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// Node of minimum relative wind speed inside the bounding box of the nodes whose
/// relative speed exceeds half its maximum; ties go to the node nearest the
/// speed-weighted centroid of those nodes.
EyeSample eye_location(const WindField& field, const Eigen::Vector2d& trade);

struct HurricaneRun {
    std::vector<WindField> snapshots;
    std::vector<EyeSample> track;  ///< one per step, starting at the initial time
    long steps = 0;
};

/// Fixed steps of at most dt, landing on every requested output time and end_time.
HurricaneRun run(const WindField& initial, const HurricaneParams& params, double dt, double end_time,
                 std::vector<double> output_times);

/// Rows x,y,u,v at 17 significant digits.
void write_field_csv(std::ostream& out, const WindField& field);
/// Rows t,x_min_speed,y_min_speed.
void write_track_csv(std::ostream& out, const std::vector<EyeSample>& track);

}  // namespace gfshock::hurricane
