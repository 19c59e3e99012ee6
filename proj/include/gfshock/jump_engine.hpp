#pragma once

/// Jump conditions for shock ansatz w = w_l + dw * H_w(x - c t).
///
/// Equations are supplied as sums of coefficient(w) * d/dt w_k and
/// coefficient(w) * d/dx w_k terms.  Under the ansatz every term becomes a
/// multiple of some H_k', and two routes give the jump condition:
///   * mean-value rule (shared profile): f(H) H' is replaced by (int_0^1 f) H';
///   * regularized oracle: the ramp fields are integrated across [0, epsilon]
///     with gf_lab quadrature, which also handles distinct profiles per variable.

#include "gfshock/gf_lab.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace gfshock::jump {

using Coefficient = std::function<double(const Eigen::VectorXd&)>;

struct Term {
    enum class Derivative { Time, Space };
    Derivative derivative;
    Eigen::Index variable;
    Coefficient coefficient;
};

/// coefficient * d/dt w_variable
Term dt(Eigen::Index variable, Coefficient coefficient);
Term dt(Eigen::Index variable, double constant = 1.0);
/// coefficient * d/dx w_variable
Term dx(Eigen::Index variable, Coefficient coefficient);
Term dx(Eigen::Index variable, double constant);

/// sum of terms ~ 0
struct Equation {
    std::string name;
    std::vector<Term> terms;
};

using EquationSet = std::vector<Equation>;

struct ShockAnsatz {
    Eigen::VectorXd left;
    Eigen::VectorXd delta;
    double speed = 0.0;
    std::vector<gf::Profile> profiles;  ///< one per state component

    static ShockAnsatz shared(const Eigen::VectorXd& left, const Eigen::VectorXd& right, double speed,
                              const gf::Profile& profile = gf::Profile::linear());

    Eigen::VectorXd right() const { return left + delta; }
    /// Single profile used by every variable, or nullptr if they differ.
    const gf::Profile* shared_profile() const;
};

/// Per-equation residuals.
using JumpResidual = Eigen::VectorXd;

/// Rankine-Hugoniot quotient flux_jump / state_jump.
double rh_speed(double flux_jump, double state_jump);
/// Same, for the flux u^2 / 2: the midpoint (u_l + u_r) / 2.
double burgers_speed(double u_left, double u_right);

/// Coefficient of H' after the mean-value substitution.  Requires a shared profile.
double assoc_jump_residual(const Equation& equation, const ShockAnsatz& ansatz);
JumpResidual assoc_jump_residuals(const EquationSet& equations, const ShockAnsatz& ansatz);

/// Integral over the ramp of the equation applied to the regularized fields.
/// Variables may carry distinct profiles.
double regularized_residual(const Equation& equation, const ShockAnsatz& ansatz, double epsilon = 1e-3);
JumpResidual regularized_residuals(const EquationSet& equations, const ShockAnsatz& ansatz,
                                   double epsilon = 1e-3);

/// lead(lambda, y) * dy/dlambda = drive(lambda, y), y(0) = 0, lambda = H_u.
struct ProfileOde {
    std::function<double(double, double)> lead;
    std::function<double(double, double)> drive;
};

/// Solution y(lambda) of a ProfileOde on a uniform lambda grid, with cubic
/// Hermite interpolation between grid points.
class ProfileRelation {
public:
    ProfileRelation(Eigen::VectorXd lambda, Eigen::VectorXd y, Eigen::VectorXd slope, gf::Profile profile);

    double operator()(double lambda) const;
    const Eigen::VectorXd& lambda() const noexcept { return lambda_; }
    const Eigen::VectorXd& values() const noexcept { return y_; }
    /// The related profile H_v = y(H_u), sampled on H_u's nodes.
    const gf::Profile& profile() const noexcept { return profile_; }

private:
    Eigen::VectorXd lambda_;
    Eigen::VectorXd y_;
    Eigen::VectorXd slope_;
    gf::Profile profile_;
};

/// Integrates the profile ODE with classical RK4 (steps uniform steps in lambda).
/// Throws ResonantProfile if lead vanishes or changes sign on the ramp and
/// InvalidProfile if y(1) != 1 or y decreases.
ProfileRelation strong_profile_relation(const ProfileOde& ode, const gf::Profile& h_u, Eigen::Index steps = 1024);

/// int_0^1 dlambda / (-c + u_l + (u_r - u_l) lambda) by adaptive quadrature.
double integral_jump_quadrature(double u_left, double u_right, double speed);

/// Speed c with 1 = (du / dsigma) * integral_jump_quadrature(u_l, u_r, c).
double integral_jump_speed(double u_left, double u_right, double delta_sigma);

/// Residuals of the k^2-model jump formulas for variables (v, u, sigma):
///   c - u_l + v_l du/dv,   du^2 - dsigma dv,   v_l dsigma/du + du/2 - k^2 du/dsigma.
/// A zero jump gives zeros; a contact (dv != 0, du = dsigma = 0) gives (c - u_l, 0, 0).
JumpResidual k2_jump_residuals(const ShockAnsatz& ansatz, double k);

/// Point mass travelling with a discontinuity of the pressureless system, in
/// conservative variables (rho, rho u, rho e).
struct DeltaShock {
    Eigen::VectorXd left;
    Eigen::VectorXd right;
    double speed = 0.0;
    Eigen::VectorXd rates;  ///< accumulation per unit time of each conserved component
};

/// Space-time balance over a window [-half_width, half_width] x [0, time]: the
/// regularized densities (ramp of width epsilon plus a ramp-derivative point mass)
/// are integrated with gf_lab quadrature at the final time and compared with the
/// initial content minus the boundary fluxes.  Returns one residual per component.
JumpResidual delta_shock_balance(const DeltaShock& shock, double time = 1.0, double half_width = 4.0,
                                 double epsilon = 1e-3);

}  // namespace gfshock::jump
