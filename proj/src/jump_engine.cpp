#include "gfshock/jump_engine.hpp"

#include "gfshock/errors.hpp"
#include "gfshock/quadrature.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace gfshock::jump {

namespace {

double mean_value(const Coefficient& coefficient, const Eigen::VectorXd& left, const Eigen::VectorXd& delta) {
    Eigen::VectorXd w(left.size());
    return integrate_adaptive([&](double lambda) {
        w = left + lambda * delta;
        return coefficient(w);
    }, 0.0, 1.0);
}

void check_dimensions(const ShockAnsatz& ansatz) {
    if (ansatz.left.size() != ansatz.delta.size()) throw InvalidArgument("ansatz left state and jump differ in size");
}

void check_variables(const Equation& equation, const ShockAnsatz& ansatz) {
    for (const auto& term : equation.terms) {
        if (term.variable < 0 || term.variable >= ansatz.left.size()) {
            throw InvalidArgument("equation '" + equation.name + "' references variable " +
                                  std::to_string(term.variable) + " outside the state");
        }
    }
}

}  // namespace

Term dt(Eigen::Index variable, Coefficient coefficient) {
    return Term{Term::Derivative::Time, variable, std::move(coefficient)};
}

Term dt(Eigen::Index variable, double constant) {
    return dt(variable, [constant](const Eigen::VectorXd&) { return constant; });
}

Term dx(Eigen::Index variable, Coefficient coefficient) {
    return Term{Term::Derivative::Space, variable, std::move(coefficient)};
}

Term dx(Eigen::Index variable, double constant) {
    return dx(variable, [constant](const Eigen::VectorXd&) { return constant; });
}

ShockAnsatz ShockAnsatz::shared(const Eigen::VectorXd& left, const Eigen::VectorXd& right, double speed,
                                const gf::Profile& profile) {
    ShockAnsatz ansatz;
    ansatz.left = left;
    ansatz.delta = right - left;
    ansatz.speed = speed;
    ansatz.profiles.assign(static_cast<std::size_t>(left.size()), profile);
    return ansatz;
}

const gf::Profile* ShockAnsatz::shared_profile() const {
    if (profiles.empty()) return nullptr;
    const auto& first = profiles.front().samples();
    for (const auto& p : profiles) {
        if (p.samples().size() != first.size() || p.samples() != first) return nullptr;
    }
    return &profiles.front();
}

double rh_speed(double flux_jump, double state_jump) {
    if (state_jump == 0.0) throw NoJump("Rankine-Hugoniot speed requested for a zero state jump");
    return flux_jump / state_jump;
}

double burgers_speed(double u_left, double u_right) { return (u_left + u_right) / 2.0; }

double assoc_jump_residual(const Equation& equation, const ShockAnsatz& ansatz) {
    check_dimensions(ansatz);
    check_variables(equation, ansatz);
    if (ansatz.profiles.size() != static_cast<std::size_t>(ansatz.left.size())) {
        throw InvalidArgument("every variable needs an assigned profile");
    }
    if (ansatz.shared_profile() == nullptr) {
        throw InvalidArgument("mean-value rule requires a shared profile; use strong_profile_relation");
    }
    double residual = 0.0;
    for (const auto& term : equation.terms) {
        const double jump = ansatz.delta(term.variable);
        if (jump == 0.0) continue;
        const double factor = term.derivative == Term::Derivative::Time ? -ansatz.speed : 1.0;
        residual += factor * jump * mean_value(term.coefficient, ansatz.left, ansatz.delta);
    }
    return residual;
}

JumpResidual assoc_jump_residuals(const EquationSet& equations, const ShockAnsatz& ansatz) {
    JumpResidual out(static_cast<Eigen::Index>(equations.size()));
    for (std::size_t k = 0; k < equations.size(); ++k) {
        out(static_cast<Eigen::Index>(k)) = assoc_jump_residual(equations[k], ansatz);
    }
    return out;
}

double regularized_residual(const Equation& equation, const ShockAnsatz& ansatz, double epsilon) {
    check_dimensions(ansatz);
    check_variables(equation, ansatz);
    if (ansatz.profiles.size() != static_cast<std::size_t>(ansatz.left.size())) {
        throw InvalidArgument("every variable needs an assigned profile");
    }
    Eigen::VectorXd w(ansatz.left.size());
    // Time derivatives of the travelling ramp are -c times the space derivative.
    return gf::ramp_integral(ansatz.profiles, epsilon, [&](const Eigen::VectorXd& h, const Eigen::VectorXd& dh) {
        w = ansatz.left + ansatz.delta.cwiseProduct(h);
        double sum = 0.0;
        for (const auto& term : equation.terms) {
            const double jump = ansatz.delta(term.variable);
            if (jump == 0.0) continue;
            const double factor = term.derivative == Term::Derivative::Time ? -ansatz.speed : 1.0;
            sum += factor * term.coefficient(w) * jump * dh(term.variable);
        }
        return sum;
    });
}

JumpResidual regularized_residuals(const EquationSet& equations, const ShockAnsatz& ansatz, double epsilon) {
    JumpResidual out(static_cast<Eigen::Index>(equations.size()));
    for (std::size_t k = 0; k < equations.size(); ++k) {
        out(static_cast<Eigen::Index>(k)) = regularized_residual(equations[k], ansatz, epsilon);
    }
    return out;
}

ProfileRelation::ProfileRelation(Eigen::VectorXd lambda, Eigen::VectorXd y, Eigen::VectorXd slope,
                                 gf::Profile profile)
    : lambda_(std::move(lambda)), y_(std::move(y)), slope_(std::move(slope)), profile_(std::move(profile)) {}

double ProfileRelation::operator()(double lambda) const {
    const Eigen::Index n = lambda_.size() - 1;
    if (lambda <= 0.0) return y_(0);
    if (lambda >= 1.0) return y_(n);
    const double h = 1.0 / static_cast<double>(n);
    const auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(lambda / h), n - 1);
    const double t = (lambda - lambda_(k)) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_(k) + (t3 - 2 * t2 + t) * h * slope_(k) + (-2 * t3 + 3 * t2) * y_(k + 1) +
           (t3 - t2) * h * slope_(k + 1);
}

ProfileRelation strong_profile_relation(const ProfileOde& ode, const gf::Profile& h_u, Eigen::Index steps) {
    if (steps < 1) throw InvalidArgument("profile relation needs at least one step");
    const double h = 1.0 / static_cast<double>(steps);
    const double initial_lead = ode.lead(0.0, 0.0);
    if (!(std::abs(initial_lead) > 1e-12)) throw ResonantProfile("profile equation is resonant at the ramp start");
    const double sign = initial_lead > 0.0 ? 1.0 : -1.0;

    auto rhs = [&](double lambda, double y) {
        const double lead = ode.lead(lambda, y);
        if (!(sign * lead > 1e-12)) {
            throw ResonantProfile("leading coefficient vanishes inside the ramp near lambda = " +
                                  std::to_string(lambda));
        }
        return ode.drive(lambda, y) / lead;
    };

    Eigen::VectorXd lambda = Eigen::VectorXd::LinSpaced(steps + 1, 0.0, 1.0);
    Eigen::VectorXd y(steps + 1);
    Eigen::VectorXd slope(steps + 1);
    y(0) = 0.0;
    slope(0) = rhs(0.0, 0.0);
    for (Eigen::Index k = 0; k < steps; ++k) {
        const double l = lambda(k);
        const double k1 = slope(k);
        const double k2 = rhs(l + h / 2, y(k) + h / 2 * k1);
        const double k3 = rhs(l + h / 2, y(k) + h / 2 * k2);
        const double k4 = rhs(l + h, y(k) + h * k3);
        y(k + 1) = y(k) + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        slope(k + 1) = rhs(lambda(k + 1), y(k + 1));
    }
    if (std::abs(y(steps) - 1.0) > 1e-8) {
        throw InvalidProfile("profile relation ends at " + std::to_string(y(steps)) +
                             " instead of 1: the jump data violate the equation");
    }

    // Sample through a temporary relation object to reuse the interpolant.
    ProfileRelation relation(lambda, y, slope, gf::Profile::linear(1));
    const Eigen::Index m = h_u.segments();
    Eigen::VectorXd samples(m + 1);
    for (Eigen::Index j = 0; j <= m; ++j) samples(j) = relation(h_u.samples()(j));
    samples(0) = 0.0;
    samples(m) = 1.0;
    for (Eigen::Index j = 1; j <= m; ++j) {
        if (samples(j) < samples(j - 1)) {
            if (samples(j - 1) - samples(j) > 1e-12) throw InvalidProfile("profile relation is not monotone");
            samples(j) = samples(j - 1);
        }
        samples(j) = std::clamp(samples(j), 0.0, 1.0);
    }
    return ProfileRelation(std::move(lambda), std::move(y), std::move(slope), gf::Profile(std::move(samples)));
}

double integral_jump_quadrature(double u_left, double u_right, double speed) {
    const double du = u_right - u_left;
    return integrate_adaptive([&](double lambda) { return 1.0 / (-speed + u_left + du * lambda); }, 0.0, 1.0);
}

double integral_jump_speed(double u_left, double u_right, double delta_sigma) {
    const double du = u_right - u_left;
    if (du == 0.0 || delta_sigma == 0.0 || !std::isfinite(du) || !std::isfinite(delta_sigma)) {
        throw NoTravelingWaveSpeed("integral jump condition has no travelling-wave speed for these jumps");
    }
    // The logarithmic antiderivative locates the admissible branch.
    const double ratio = std::exp(delta_sigma);
    if (!(ratio > 0.0) || ratio == 1.0 || !std::isfinite(ratio)) {
        throw NoTravelingWaveSpeed("jump in sigma too large or too small to locate a speed");
    }
    const double estimate = (ratio * u_left - u_right) / (ratio - 1.0);
    const double lo_u = std::min(u_left, u_right);
    const double hi_u = std::max(u_left, u_right);
    const double side = estimate > hi_u ? 1.0 : (estimate < lo_u ? -1.0 : 0.0);
    if (side == 0.0) throw NoTravelingWaveSpeed("no speed outside the velocity jump interval");
    const double edge = side > 0.0 ? hi_u : lo_u;
    const double distance = std::abs(estimate - edge);
    if (!(distance > 0.0)) throw NoTravelingWaveSpeed("speed coincides with a ramp velocity");

    const double scale = du / delta_sigma;
    auto excess = [&](double c) { return scale * integral_jump_quadrature(u_left, u_right, c) - 1.0; };

    double a = edge + side * distance / 4.0;
    double b = edge + side * distance * 4.0;
    double fa = excess(a);
    double fb = excess(b);
    for (int k = 0; k < 60 && fa * fb > 0.0; ++k) {
        a = edge + (a - edge) / 4.0;
        b = edge + (b - edge) * 4.0;
        fa = excess(a);
        fb = excess(b);
    }
    if (fa * fb > 0.0) throw NoTravelingWaveSpeed("could not bracket the travelling-wave speed");
    if (a > b) {
        std::swap(a, b);
        std::swap(fa, fb);
    }

    std::uintmax_t iterations = 200;
    const auto bracket = boost::math::tools::toms748_solve(excess, a, b, fa, fb,
                                                           boost::math::tools::eps_tolerance<double>(40), iterations);
    double c = 0.5 * (bracket.first + bracket.second);
    for (int k = 0; k < 8; ++k) {
        const double f = excess(c);
        if (std::abs(f) <= 1e-15) break;
        const double slope = scale * integrate_adaptive([&](double lambda) {
            const double d = -c + u_left + du * lambda;
            return 1.0 / (d * d);
        }, 0.0, 1.0);
        const double next = c - f / slope;
        if (next < std::min(bracket.first, bracket.second) || next > std::max(bracket.first, bracket.second)) break;
        c = next;
    }
    return c;
}

JumpResidual k2_jump_residuals(const ShockAnsatz& ansatz, double k) {
    check_dimensions(ansatz);
    if (ansatz.left.size() != 3) throw InvalidArgument("k^2-model states are (v, u, sigma)");
    if (!(k > 0.0)) throw InvalidArgument("k must be positive");
    const double v_l = ansatz.left(0);
    const double u_l = ansatz.left(1);
    const double dv = ansatz.delta(0);
    const double du = ansatz.delta(1);
    const double ds = ansatz.delta(2);
    const double c = ansatz.speed;
    JumpResidual r = JumpResidual::Zero(3);
    if (dv == 0.0 && du == 0.0 && ds == 0.0) return r;
    if (du == 0.0 && ds == 0.0) {
        r(0) = c - u_l;
        return r;
    }
    if (dv == 0.0 || du == 0.0 || ds == 0.0) {
        throw DegenerateJump("k^2-model jump with some but not all components zero");
    }
    r(0) = c - u_l + v_l * du / dv;
    r(1) = du * du - ds * dv;
    r(2) = v_l * ds / du + du / 2.0 - k * k * du / ds;
    return r;
}

namespace {

Eigen::VectorXd pressureless_flux(const Eigen::VectorXd& q) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(q.size());
    if (q(0) <= 0.0) return f;
    const double u = q(1) / q(0);
    f(0) = q(1);
    f(1) = q(1) * u;
    f(2) = q(2) * u;
    return f;
}

}  // namespace

JumpResidual delta_shock_balance(const DeltaShock& shock, double time, double half_width, double epsilon) {
    if (shock.left.size() != 3 || shock.right.size() != 3 || shock.rates.size() != 3) {
        throw InvalidArgument("delta shock states are (rho, rho u, rho e)");
    }
    if (!(half_width > std::abs(shock.speed) * time + epsilon)) {
        throw InvalidArgument("balance window must contain the shock at the final time");
    }
    const gf::Profile ramp = gf::Profile::linear();
    const std::vector<gf::Profile> one{ramp};
    const Eigen::VectorXd jump = shock.right - shock.left;

    // Content of the window when the ramp starts at x0, plus a point mass.
    auto content = [&](double x0, const Eigen::VectorXd& mass) {
        Eigen::VectorXd total(3);
        for (Eigen::Index i = 0; i < 3; ++i) {
            const double ramp_part = gf::ramp_integral(one, epsilon, [&](const Eigen::VectorXd& h, const Eigen::VectorXd&) {
                return shock.left(i) + jump(i) * h(0);
            });
            const double delta_part = gf::ramp_integral(one, epsilon, [&](const Eigen::VectorXd&, const Eigen::VectorXd& dh) {
                return mass(i) * dh(0);
            });
            total(i) = shock.left(i) * (x0 + half_width) + ramp_part + shock.right(i) * (half_width - x0 - epsilon) +
                       delta_part;
        }
        return total;
    };

    const Eigen::VectorXd before = content(0.0, Eigen::VectorXd::Zero(3));
    const Eigen::VectorXd after = content(shock.speed * time, shock.rates * time);
    const Eigen::VectorXd outflow = time * (pressureless_flux(shock.right) - pressureless_flux(shock.left));
    return after - before + outflow;
}

}  // namespace gfshock::jump
