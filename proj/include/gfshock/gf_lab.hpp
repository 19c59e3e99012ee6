#pragma once

/// Numerical representatives of Heaviside and Dirac families.
///
/// A Heaviside function is represented by a ramp that climbs from 0 to 1 across
/// [0, epsilon].  The ramp shape (its Profile) is stored as samples at equispaced
/// nodes and interpolated linearly, so its derivative is piecewise constant and
/// polynomial integrands in the ramp values integrate exactly segment by segment.

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <span>
#include <vector>

namespace gfshock::gf {

inline constexpr Eigen::Index kDefaultSegments = 1024;

/// Monotone 0 -> 1 ramp on the unit interval.
class Profile {
public:
    /// Validates samples[0] == 0, samples[M] == 1 and nondecreasing values.
    explicit Profile(Eigen::VectorXd samples);

    static Profile linear(Eigen::Index segments = kDefaultSegments);
    /// s -> s^exponent; exponent 2 gives the square of the linear ramp.
    static Profile power(double exponent, Eigen::Index segments = kDefaultSegments);
    /// Samples a map with f(0) = 0, f(1) = 1 at the nodes; endpoints are pinned.
    static Profile from_function(const std::function<double(double)>& f,
                                 Eigen::Index segments = kDefaultSegments);
    /// Normalized cumulative sum of nonnegative increments (one per segment).
    static Profile from_increments(const Eigen::VectorXd& increments);
    /// Random monotone profile with strictly positive increments.
    static Profile random(std::mt19937_64& rng, Eigen::Index segments = kDefaultSegments);

    Eigen::Index segments() const noexcept { return samples_.size() - 1; }
    const Eigen::VectorXd& samples() const noexcept { return samples_; }

    /// Ramp value at s, clamped to [0, 1] outside the unit interval.
    double operator()(double s) const;
    /// dH/ds on segment j, i.e. on [j/M, (j+1)/M].
    double slope(Eigen::Index j) const;

private:
    Eigen::VectorXd samples_;
};

/// Profile stretched over [0, epsilon]: H_eps(x) = P(x / epsilon).
class RegularizedStep {
public:
    RegularizedStep(Profile profile, double epsilon);

    const Profile& profile() const noexcept { return profile_; }
    double epsilon() const noexcept { return epsilon_; }

    double value(double x) const;
    /// The Dirac representative: piecewise constant, zero outside (0, epsilon).
    double derivative(double x) const;
    /// Segment boundaries epsilon * j / M, j = 0..M.
    Eigen::VectorXd breakpoints() const;

private:
    Profile profile_;
    double epsilon_;
};

/// Smooth compactly supported test function.
class TestFunction {
public:
    TestFunction(double lo, double hi, std::function<double(double)> evaluator);

    /// exp(1 - 1/(1 - ((x - center)/radius)^2)): peak value 1 at center.
    static TestFunction bump(double center = 0.0, double radius = 1.0);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double operator()(double x) const;

private:
    double lo_;
    double hi_;
    std::function<double(double)> evaluator_;
};

/// Polynomial f(p, q) = sum_ij coeffs(i, j) p^i q^j.
class Polynomial2 {
public:
    Polynomial2() : coeffs_(Eigen::MatrixXd::Zero(1, 1)) {}
    explicit Polynomial2(Eigen::MatrixXd coeffs) : coeffs_(std::move(coeffs)) {}

    static Polynomial2 monomial(int p_power, int q_power, double coefficient = 1.0);
    static Polynomial2 constant(double value) { return monomial(0, 0, value); }

    const Eigen::MatrixXd& coeffs() const noexcept { return coeffs_; }
    int degree() const;
    double operator()(double p, double q) const;

    Polynomial2 operator+(const Polynomial2& other) const;
    Polynomial2 operator-(const Polynomial2& other) const;
    Polynomial2 operator*(double scale) const;

private:
    Eigen::MatrixXd coeffs_;
};

/// Integral of f(H_a, H_b) dH_b for ramps of common width, in ramp variables.
double moment_integral(const Polynomial2& f, const Profile& a, const Profile& b);

/// A family of regularized fields indexed by epsilon: (x, epsilon) -> value.
using RegularizedField = std::function<double(double, double)>;

struct AssociationReport {
    std::vector<double> epsilons;
    std::vector<double> values;  ///< pairings of (g1 - g2) with phi
    double order = 0.0;          ///< least-squares slope of log|value| against log epsilon
    bool tends_to_zero = false;
};

/// Pairs g1 - g2 with phi along a strictly decreasing epsilon sequence.  Fields are
/// assumed smooth away from the ramp nodes epsilon * j / ramp_segments.
AssociationReport association_check(const RegularizedField& g1, const RegularizedField& g2,
                                    const TestFunction& phi, std::span<const double> eps_sequence,
                                    Eigen::Index ramp_segments = kDefaultSegments);

/// Integral of H_eps' * phi.
double delta_pairing(const RegularizedStep& step, const TestFunction& phi);

/// Integral over the ramp [0, epsilon] of integrand(H(x), H'(x)) where H, H' hold the
/// value and derivative of each profile's regularized step at x.  Breakpoints are
/// the union of every profile's nodes, with an 8-point Gauss rule per piece.
double ramp_integral(std::span<const Profile> profiles, double epsilon,
                     const std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>& integrand);

}  // namespace gfshock::gf
