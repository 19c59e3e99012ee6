#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace gfshock {

enum class WaveKind {
    Shock,         ///< all variables jump with one shared profile
    Contact,       ///< a linearly degenerate jump (velocity continuous)
    Elastic,       ///< elastic wave of the elastoplastic force step
    Plastic,       ///< stress deviator held at the yield cap
    ElastoPlastic  ///< merged front: s varies over part of the ramp only
};

struct Wave {
    double speed = 0.0;
    Eigen::VectorXd left;
    Eigen::VectorXd right;
    WaveKind kind = WaveKind::Shock;
    /// ElastoPlastic only: state inside the ramp where s reaches the yield cap.
    /// Each variable runs linearly from left to knot and from knot to right.
    Eigen::VectorXd knot{};
};

/// Point mass created at the interface and travelling with it.
struct DeltaRecord {
    double speed = 0.0;
    Eigen::VectorXd rates;  ///< accumulation per unit time of each state component
};

/// Constant states separated by discontinuities, in order of speed.
struct RiemannFan {
    Eigen::VectorXd left;
    Eigen::VectorXd right;
    std::vector<Wave> waves;
    std::optional<DeltaRecord> delta;

    bool empty() const { return waves.empty() && !delta; }
    double max_abs_speed() const;
    /// Solution at x / t = xi; on a wave the left state is returned.
    Eigen::VectorXd sample(double xi) const;
    /// Throws InvalidArgument if speeds decrease, neighbouring states disagree
    /// or the outer states differ from the data.
    void validate(double tolerance = 1e-12) const;
};

/// A Riemann solver for one (sub)system, acting on the grid state vector.
class RiemannSolver {
public:
    virtual ~RiemannSolver() = default;

    virtual std::string name() const = 0;
    virtual std::vector<std::string> component_names() const = 0;
    Eigen::Index dimension() const { return static_cast<Eigen::Index>(component_names().size()); }

    virtual RiemannFan solve(const Eigen::VectorXd& left, const Eigen::VectorXd& right) const = 0;

    /// Components negated in the ghost cell of a reflective wall.
    virtual std::vector<Eigen::Index> odd_components() const { return {}; }
    virtual bool produces_point_masses() const { return false; }
};

}  // namespace gfshock
