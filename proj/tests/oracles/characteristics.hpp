#pragma once

// Exact characteristics of the rotating wind model with k = mu: the relative
// velocity w turns at rate -omega and the particle moves by u* t + A(t) w0.

#include <Eigen/Dense>

#include <cmath>
#include <functional>

namespace oracle {

using Wind = std::function<Eigen::Vector2d(const Eigen::Vector2d&)>;

inline Eigen::Matrix2d rotation_integral(double omega, double t) {
    if (omega == 0.0) return t * Eigen::Matrix2d::Identity();
    const double s = std::sin(omega * t) / omega;
    const double c = (1.0 - std::cos(omega * t)) / omega;
    Eigen::Matrix2d a;
    a << s, c, -c, s;
    return a;
}

/// Relative speed at x after time t, given the initial relative wind w0.
inline double exact_relative_speed(const Wind& w0, const Eigen::Vector2d& trade, double omega, double t,
                                   const Eigen::Vector2d& x) {
    const Eigen::Matrix2d a = rotation_integral(omega, t);
    Eigen::Vector2d x0 = x - trade * t;
    for (int it = 0; it < 100; ++it) {
        const Eigen::Vector2d next = x - trade * t - a * w0(x0);
        const double change = (next - x0).norm();
        x0 = next;
        if (change < 1e-15) break;
    }
    return w0(x0).norm();
}

}  // namespace oracle
