#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace gfshock {

struct NewtonOptions {
    int max_iterations = 100;
    double tolerance = 1e-12;  ///< on the max-norm of the residual
    int max_halvings = 40;
    double fd_step = 1e-7;     ///< relative central-difference step for the Jacobian
};

template <int N>
struct NewtonResult {
    Eigen::Matrix<double, N, 1> x;
    double residual_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Damped Newton iteration with a central-difference Jacobian.  A step is halved
/// while the trial point is inadmissible or increases the residual norm.
template <int N, typename Residual, typename Admissible>
NewtonResult<N> damped_newton(Residual&& residual, const Eigen::Matrix<double, N, 1>& start,
                              Admissible&& admissible, const NewtonOptions& options = {}) {
    using Vector = Eigen::Matrix<double, N, 1>;
    using Matrix = Eigen::Matrix<double, N, N>;

    NewtonResult<N> result;
    result.x = start;
    Vector r = residual(result.x);
    result.residual_norm = r.template lpNorm<Eigen::Infinity>();

    for (int it = 0; it < options.max_iterations; ++it) {
        if (result.residual_norm <= options.tolerance) {
            result.converged = true;
            return result;
        }
        Matrix jacobian;
        for (Eigen::Index j = 0; j < start.size(); ++j) {
            const double h = options.fd_step * std::max(1.0, std::abs(result.x(j)));
            Vector plus = result.x;
            Vector minus = result.x;
            plus(j) += h;
            minus(j) -= h;
            if (!admissible(minus)) minus = result.x;
            if (!admissible(plus)) plus = result.x;
            jacobian.col(j) = (residual(plus) - residual(minus)) / (plus(j) - minus(j));
        }
        const Vector step = jacobian.fullPivLu().solve(r);
        if (!step.allFinite()) break;

        double damping = 1.0;
        bool accepted = false;
        for (int k = 0; k <= options.max_halvings; ++k, damping /= 2.0) {
            const Vector trial = result.x - damping * step;
            if (!admissible(trial)) continue;
            const Vector r_trial = residual(trial);
            const double norm = r_trial.template lpNorm<Eigen::Infinity>();
            if (std::isfinite(norm) && norm < result.residual_norm) {
                result.x = trial;
                r = r_trial;
                result.residual_norm = norm;
                accepted = true;
                break;
            }
        }
        result.iterations = it + 1;
        if (!accepted) break;
    }
    result.converged = result.residual_norm <= options.tolerance;
    return result;
}

}  // namespace gfshock
