#include "gfshock/riemann_fan.hpp"

#include "gfshock/errors.hpp"

#include <cmath>

namespace gfshock {

namespace {

bool close(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tolerance) {
    if (a.size() != b.size()) return false;
    const double scale = 1.0 + std::max(a.lpNorm<Eigen::Infinity>(), b.lpNorm<Eigen::Infinity>());
    return (a - b).lpNorm<Eigen::Infinity>() <= tolerance * scale;
}

}  // namespace

double RiemannFan::max_abs_speed() const {
    double out = 0.0;
    for (const auto& wave : waves) out = std::max(out, std::abs(wave.speed));
    if (delta) out = std::max(out, std::abs(delta->speed));
    return out;
}

Eigen::VectorXd RiemannFan::sample(double xi) const {
    for (const auto& wave : waves)
        if (xi <= wave.speed) return wave.left;
    return waves.empty() ? left : waves.back().right;
}

void RiemannFan::validate(double tolerance) const {
    if (waves.empty()) return;
    if (!close(waves.front().left, left, tolerance) || !close(waves.back().right, right, tolerance))
        throw InvalidArgument("fan outer states differ from the Riemann data");
    for (std::size_t k = 1; k < waves.size(); ++k) {
        if (waves[k].speed < waves[k - 1].speed)
            throw InvalidArgument("fan wave speeds decrease");
        if (!close(waves[k - 1].right, waves[k].left, tolerance))
            throw InvalidArgument("neighbouring fan states disagree");
    }
}

}  // namespace gfshock
