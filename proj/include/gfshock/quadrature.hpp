#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <utility>

namespace gfshock {

/// Gauss-Legendre rule on [-1, 1]: nodes and weights.
template <typename Scalar>
struct GaussRule {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;

    Eigen::Index size() const { return nodes.size(); }
};

/// Golub-Welsch: the nodes are the eigenvalues of the symmetric Jacobi matrix of
/// the Legendre recurrence, the weights twice the squared first eigenvector entries.
template <typename Scalar = double>
GaussRule<Scalar> gauss_legendre(int points) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    GaussRule<Scalar> rule;
    if (points == 1) {
        rule.nodes = Eigen::Matrix<Scalar, 1, 1>::Zero();
        rule.weights = Eigen::Matrix<Scalar, 1, 1>::Constant(Scalar(2));
        return rule;
    }
    Matrix jacobi = Matrix::Zero(points, points);
    for (int k = 1; k < points; ++k) {
        const Scalar kk = Scalar(k);
        const Scalar beta = kk / std::sqrt(Scalar(4) * kk * kk - Scalar(1));
        jacobi(k, k - 1) = beta;
        jacobi(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(jacobi);
    rule.nodes = solver.eigenvalues();
    rule.weights = Scalar(2) * solver.eigenvectors().row(0).transpose().array().square();
    // Symmetrize to remove the eigensolver's rounding asymmetry.
    for (int k = 0; k < points / 2; ++k) {
        const int m = points - 1 - k;
        const Scalar x = (rule.nodes(m) - rule.nodes(k)) / Scalar(2);
        const Scalar w = (rule.weights(m) + rule.weights(k)) / Scalar(2);
        rule.nodes(k) = -x;
        rule.nodes(m) = x;
        rule.weights(k) = w;
        rule.weights(m) = w;
    }
    if (points % 2 == 1) rule.nodes(points / 2) = Scalar(0);
    return rule;
}

/// Applies a rule to f on [a, b].
template <typename Scalar, typename F>
Scalar integrate(const GaussRule<Scalar>& rule, F&& f, Scalar a, Scalar b) {
    const Scalar half = (b - a) / Scalar(2);
    const Scalar mid = (a + b) / Scalar(2);
    Scalar sum(0);
    for (Eigen::Index k = 0; k < rule.size(); ++k) {
        sum += rule.weights(k) * f(mid + half * rule.nodes(k));
    }
    return half * sum;
}

/// Adaptive bisection with a 16-point rule; a panel is accepted when its two halves
/// reproduce the whole to tol.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double tol = 1e-14, int max_depth = 40) {
    static const GaussRule<double> fine = gauss_legendre<double>(16);
    auto recurse = [&](auto&& self, double lo, double hi, double estimate, int depth) -> double {
        const double mid = 0.5 * (lo + hi);
        const double left = integrate(fine, f, lo, mid);
        const double right = integrate(fine, f, mid, hi);
        const double refined = left + right;
        if (depth >= max_depth || std::abs(refined - estimate) <= tol * std::max(1.0, std::abs(refined))) {
            return refined;
        }
        return self(self, lo, mid, left, depth + 1) + self(self, mid, hi, right, depth + 1);
    };
    return recurse(recurse, a, b, integrate(fine, f, a, b), 0);
}

}  // namespace gfshock
