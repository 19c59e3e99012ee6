#pragma once

/// Concrete systems and their Riemann solvers.
///
/// Fan state vectors, by system:
///   burgers            (u)
///   k2 model           (v, u, sigma)            v = 1 / rho
///   pressureless step  (rho, rho u, rho e)
///   pressure step      (rho, rho u, rho e)      rho frozen in time
///   elasto transport   (v, u, s, p)
///   elasto force       (v, u, s, p)

#include "gfshock/jump_engine.hpp"
#include "gfshock/riemann_fan.hpp"

#include <Eigen/Dense>

#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace gfshock::systems {

/// p = (gamma - 1) rho (e - u^2 / 2)
template <typename Scalar>
Scalar gamma_law(Scalar rho, Scalar e, Scalar u, Scalar gamma) {
    return (gamma - Scalar(1)) * rho * (e - u * u / Scalar(2));
}

struct EulerState {
    double rho = 0.0;
    double u = 0.0;
    double e = 0.0;  ///< specific total energy

    /// rho = 0 with undefined (NaN) velocity and energy.
    static EulerState vacuum();
    static EulerState from_pressure(double rho, double u, double p, double gamma);
    static EulerState from_conservative(const Eigen::Vector3d& q);

    bool is_vacuum() const { return rho == 0.0; }
    /// (rho, rho u, rho e); vacuum maps to zero.
    Eigen::Vector3d conservative() const;
    double pressure(double gamma) const { return gamma_law(rho, e, u, gamma); }
};

struct K2State {
    double v = 1.0;
    double u = 0.0;
    double sigma = 0.0;

    Eigen::Vector3d vector() const { return {v, u, sigma}; }
    static K2State from_vector(const Eigen::Vector3d& w) { return {w(0), w(1), w(2)}; }
};

struct ElastoState {
    double v = 1.0;
    double u = 0.0;
    double s = 0.0;  ///< stress deviator
    double p = 0.0;

    double sigma() const { return s - p; }
    Eigen::Vector4d vector() const { return {v, u, s, p}; }
    static ElastoState from_vector(const Eigen::Vector4d& w) { return {w(0), w(1), w(2), w(3)}; }
};

struct ElastoParams {
    double gamma = 3.0;
    double k = 1.0;
    double s0 = 1.0;  ///< yield cap on |s|

    /// k^2 below the cap (elastic), 0 at or beyond it (plastic).
    double k2_of(double s) const;
    bool plastic(double s) const;
};

// Riemann solvers ------------------------------------------------------------

/// One discontinuity at the midpoint speed, also for expansive data.
RiemannFan burgers_riemann(double u_left, double u_right);

/// Wave of the k^2 model on the far side from `from`, reached at specific volume v_to.
struct K2Jump {
    K2State state;
    double speed = 0.0;
};

/// family -1: left-facing (speed ~ u - k sqrt v); +1: right-facing.
K2Jump k2_hugoniot(const K2State& from, double v_to, int family, bool from_is_left, double k);

/// Left-facing wave, contact at the middle velocity, right-facing wave.
RiemannFan k2_riemann(const K2State& left, const K2State& right, double k);

/// Delta shock (u_l > u_r) or two contacts around a vacuum (u_l < u_r).
RiemannFan pressureless_riemann(const EulerState& left, const EulerState& right);

struct VelocityEnergy {
    double u = 0.0;
    double e = 0.0;
};

/// Frozen-density acoustic step.  Different densities on the two sides are
/// separated by a stationary contact across which u and p are continuous.
RiemannFan pressure_step_riemann(double rho_left, VelocityEnergy left, double rho_right, VelocityEnergy right,
                                 double gamma);
RiemannFan pressure_step_riemann(double rho, VelocityEnergy left, VelocityEnergy right, double gamma);

/// Every variable carried by one discontinuity at the midpoint velocity.
RiemannFan elasto_transport_riemann(const ElastoState& left, const ElastoState& right);

/// Outer waves on each side (elastic, elastic precursor + plastic, merged
/// elastoplastic, or plastic) and a stationary contact in v at x = 0.
RiemannFan elasto_force_riemann(const ElastoState& left, const ElastoState& right, const ElastoParams& params);

// Equations satisfied by the waves, in the fan state variables ---------------

jump::EquationSet burgers_equations();
/// (v_t + u v_x - v u_x, u_t + u u_x - v sigma_x, sigma_t + u sigma_x - k^2 u_x)
jump::EquationSet k2_equations(double k);
jump::EquationSet pressureless_equations();
jump::EquationSet pressure_step_equations(double gamma);
jump::EquationSet elasto_transport_equations();
jump::EquationSet elasto_force_equations(const ElastoParams& params);

/// Ansatz for a wave: a shared linear profile, except for ElastoPlastic waves
/// where s follows a clipped copy of the shared profile.
jump::ShockAnsatz wave_ansatz(const Wave& wave, Eigen::Index segments = gf::kDefaultSegments);

// Solver objects for the Godunov engine ---------------------------------------

class BurgersSolver final : public RiemannSolver {
public:
    std::string name() const override { return "burgers"; }
    std::vector<std::string> component_names() const override { return {"u"}; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;
    std::vector<Eigen::Index> odd_components() const override { return {0}; }
};

class K2Solver final : public RiemannSolver {
public:
    explicit K2Solver(double k);
    std::string name() const override { return "k2"; }
    std::vector<std::string> component_names() const override { return {"v", "u", "sigma"}; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;
    std::vector<Eigen::Index> odd_components() const override { return {1}; }
    double k() const { return k_; }

private:
    double k_;
};

class PressurelessSolver final : public RiemannSolver {
public:
    std::string name() const override { return "pressureless"; }
    std::vector<std::string> component_names() const override { return {"rho", "rho_u", "rho_e"}; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;
    std::vector<Eigen::Index> odd_components() const override { return {1}; }
    bool produces_point_masses() const override { return true; }
};

class PressureStepSolver final : public RiemannSolver {
public:
    explicit PressureStepSolver(double gamma);
    std::string name() const override { return "pressure_step"; }
    std::vector<std::string> component_names() const override { return {"rho", "rho_u", "rho_e"}; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;
    std::vector<Eigen::Index> odd_components() const override { return {1}; }
    double gamma() const { return gamma_; }

private:
    double gamma_;
};

class ElastoTransportSolver final : public RiemannSolver {
public:
    std::string name() const override { return "elasto_transport"; }
    std::vector<std::string> component_names() const override { return {"v", "u", "s", "p"}; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;
    std::vector<Eigen::Index> odd_components() const override { return {1}; }
};

class ElastoForceSolver final : public RiemannSolver {
public:
    explicit ElastoForceSolver(ElastoParams params);
    std::string name() const override { return "elasto_force"; }
    std::vector<std::string> component_names() const override { return {"v", "u", "s", "p"}; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;
    std::vector<Eigen::Index> odd_components() const override { return {1}; }
    const ElastoParams& params() const { return params_; }

private:
    ElastoParams params_;
};

/// Leaves the data unchanged: every fan is empty.
class IdentitySolver final : public RiemannSolver {
public:
    explicit IdentitySolver(std::vector<std::string> names) : names_(std::move(names)) {}
    std::string name() const override { return "identity"; }
    std::vector<std::string> component_names() const override { return names_; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;

private:
    std::vector<std::string> names_;
};

/// w_t + a w_x = 0 for every component: one contact at speed a.
class LinearAdvectionSolver final : public RiemannSolver {
public:
    LinearAdvectionSolver(double speed, std::vector<std::string> names)
        : speed_(speed), names_(std::move(names)) {}
    std::string name() const override { return "advection"; }
    std::vector<std::string> component_names() const override { return names_; }
    RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const override;

private:
    double speed_;
    std::vector<std::string> names_;
};

}  // namespace gfshock::systems
