#include "gfshock/gf_lab.hpp"

#include "gfshock/errors.hpp"
#include "gfshock/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gfshock::gf {

namespace {

// Sorted union of the node sets {j / M_k} of several profiles.
Eigen::VectorXd union_nodes(std::span<const Eigen::Index> segment_counts) {
    const bool uniform = std::all_of(segment_counts.begin(), segment_counts.end(),
                                     [&](Eigen::Index m) { return m == segment_counts.front(); });
    if (uniform) {
        const Eigen::Index m = segment_counts.front();
        Eigen::VectorXd nodes(m + 1);
        for (Eigen::Index j = 0; j <= m; ++j) nodes(j) = static_cast<double>(j) / static_cast<double>(m);
        nodes(m) = 1.0;
        return nodes;
    }
    std::vector<double> all;
    for (Eigen::Index m : segment_counts) {
        for (Eigen::Index j = 0; j <= m; ++j) all.push_back(static_cast<double>(j) / static_cast<double>(m));
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return Eigen::Map<Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
}

Eigen::Index segment_of(double s, Eigen::Index m) {
    const auto j = static_cast<Eigen::Index>(std::floor(s * static_cast<double>(m)));
    return std::clamp<Eigen::Index>(j, 0, m - 1);
}

const GaussRule<double>& rule8() {
    static const GaussRule<double> rule = gauss_legendre<double>(8);
    return rule;
}

}  // namespace

Profile::Profile(Eigen::VectorXd samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2) throw InvalidProfile("profile needs at least one segment");
    if (samples_(0) != 0.0) throw InvalidProfile("profile must start at 0");
    if (samples_(samples_.size() - 1) != 1.0) throw InvalidProfile("profile must end at 1");
    for (Eigen::Index j = 1; j < samples_.size(); ++j) {
        if (!(samples_(j) >= samples_(j - 1))) {
            throw InvalidProfile("profile decreases at node " + std::to_string(j));
        }
    }
}

Profile Profile::linear(Eigen::Index segments) {
    return from_function([](double s) { return s; }, segments);
}

Profile Profile::power(double exponent, Eigen::Index segments) {
    if (!(exponent > 0.0)) throw InvalidProfile("power profile needs a positive exponent");
    return from_function([exponent](double s) { return std::pow(s, exponent); }, segments);
}

Profile Profile::from_function(const std::function<double(double)>& f, Eigen::Index segments) {
    if (segments < 1) throw InvalidProfile("profile needs at least one segment");
    Eigen::VectorXd samples(segments + 1);
    for (Eigen::Index j = 0; j <= segments; ++j) {
        samples(j) = f(static_cast<double>(j) / static_cast<double>(segments));
    }
    samples(0) = 0.0;
    samples(segments) = 1.0;
    return Profile(std::move(samples));
}

Profile Profile::from_increments(const Eigen::VectorXd& increments) {
    if (increments.size() < 1) throw InvalidProfile("profile needs at least one segment");
    if ((increments.array() < 0.0).any()) throw InvalidProfile("profile increments must be nonnegative");
    const double total = increments.sum();
    if (!(total > 0.0)) throw InvalidProfile("profile increments sum to zero");
    Eigen::VectorXd samples(increments.size() + 1);
    samples(0) = 0.0;
    double running = 0.0;
    for (Eigen::Index j = 0; j < increments.size(); ++j) {
        running += increments(j);
        samples(j + 1) = std::min(1.0, running / total);
    }
    samples(increments.size()) = 1.0;
    return Profile(std::move(samples));
}

Profile Profile::random(std::mt19937_64& rng, Eigen::Index segments) {
    // positive density with a few random modes
    std::uniform_real_distribution<double> amp(-0.9, 0.9);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    const double a1 = amp(rng), a2 = amp(rng) * 0.5, p1 = phase(rng), p2 = phase(rng);
    std::uniform_real_distribution<double> jitter(0.8, 1.2);
    Eigen::VectorXd increments(segments);
    for (Eigen::Index j = 0; j < segments; ++j) {
        const double s = (static_cast<double>(j) + 0.5) / static_cast<double>(segments);
        const double density = 1.0 + a1 * std::sin(6.283185307179586 * s + p1) +
                               a2 * std::sin(12.566370614359172 * s + p2);
        increments(j) = std::max(density, 0.05) * jitter(rng);
    }
    return from_increments(increments);
}

double Profile::operator()(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const Eigen::Index m = segments();
    const Eigen::Index j = segment_of(s, m);
    const double t = s * static_cast<double>(m) - static_cast<double>(j);
    return samples_(j) + t * (samples_(j + 1) - samples_(j));
}

double Profile::slope(Eigen::Index j) const {
    return (samples_(j + 1) - samples_(j)) * static_cast<double>(segments());
}

RegularizedStep::RegularizedStep(Profile profile, double epsilon)
    : profile_(std::move(profile)), epsilon_(epsilon) {
    if (!(epsilon > 0.0)) throw InvalidArgument("regularized step needs a positive width");
}

double RegularizedStep::value(double x) const { return profile_(x / epsilon_); }

double RegularizedStep::derivative(double x) const {
    if (x <= 0.0 || x >= epsilon_) return 0.0;
    return profile_.slope(segment_of(x / epsilon_, profile_.segments())) / epsilon_;
}

Eigen::VectorXd RegularizedStep::breakpoints() const {
    const Eigen::Index m = profile_.segments();
    Eigen::VectorXd nodes = Eigen::VectorXd::LinSpaced(m + 1, 0.0, 1.0) * epsilon_;
    nodes(m) = epsilon_;
    return nodes;
}

TestFunction::TestFunction(double lo, double hi, std::function<double(double)> evaluator)
    : lo_(lo), hi_(hi), evaluator_(std::move(evaluator)) {
    if (!(hi > lo)) throw InvalidArgument("test function support must be a nonempty interval");
}

TestFunction TestFunction::bump(double center, double radius) {
    if (!(radius > 0.0)) throw InvalidArgument("bump radius must be positive");
    return TestFunction(center - radius, center + radius, [center, radius](double x) {
        const double t = (x - center) / radius;
        const double d = 1.0 - t * t;
        return d > 0.0 ? std::exp(1.0 - 1.0 / d) : 0.0;
    });
}

double TestFunction::operator()(double x) const {
    if (x <= lo_ || x >= hi_) return 0.0;
    return evaluator_(x);
}

Polynomial2 Polynomial2::monomial(int p_power, int q_power, double coefficient) {
    if (p_power < 0 || q_power < 0) throw InvalidArgument("monomial powers must be nonnegative");
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(p_power + 1, q_power + 1);
    c(p_power, q_power) = coefficient;
    return Polynomial2(std::move(c));
}

int Polynomial2::degree() const {
    int deg = 0;
    for (Eigen::Index i = 0; i < coeffs_.rows(); ++i) {
        for (Eigen::Index j = 0; j < coeffs_.cols(); ++j) {
            if (coeffs_(i, j) != 0.0) deg = std::max(deg, static_cast<int>(i + j));
        }
    }
    return deg;
}

double Polynomial2::operator()(double p, double q) const {
    double sum = 0.0;
    double p_pow = 1.0;
    for (Eigen::Index i = 0; i < coeffs_.rows(); ++i) {
        double row = 0.0;
        double q_pow = 1.0;
        for (Eigen::Index j = 0; j < coeffs_.cols(); ++j) {
            row += coeffs_(i, j) * q_pow;
            q_pow *= q;
        }
        sum += row * p_pow;
        p_pow *= p;
    }
    return sum;
}

Polynomial2 Polynomial2::operator+(const Polynomial2& other) const {
    const Eigen::Index rows = std::max(coeffs_.rows(), other.coeffs_.rows());
    const Eigen::Index cols = std::max(coeffs_.cols(), other.coeffs_.cols());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(rows, cols);
    c.topLeftCorner(coeffs_.rows(), coeffs_.cols()) += coeffs_;
    c.topLeftCorner(other.coeffs_.rows(), other.coeffs_.cols()) += other.coeffs_;
    return Polynomial2(std::move(c));
}

Polynomial2 Polynomial2::operator-(const Polynomial2& other) const { return *this + other * -1.0; }

Polynomial2 Polynomial2::operator*(double scale) const { return Polynomial2(coeffs_ * scale); }

double moment_integral(const Polynomial2& f, const Profile& a, const Profile& b) {
    const Eigen::Index counts[] = {a.segments(), b.segments()};
    const Eigen::VectorXd nodes = union_nodes(counts);
    // f(A(s), B(s)) is a polynomial of degree deg(f) on each piece and B' is constant.
    const int points = f.degree() / 2 + 1;
    const GaussRule<double> rule = gauss_legendre<double>(points);
    double total = 0.0;
    for (Eigen::Index k = 0; k + 1 < nodes.size(); ++k) {
        const double lo = nodes(k);
        const double hi = nodes(k + 1);
        const double slope = b.slope(segment_of(0.5 * (lo + hi), b.segments()));
        if (slope == 0.0) continue;
        total += slope * integrate(rule, [&](double s) { return f(a(s), b(s)); }, lo, hi);
    }
    return total;
}

AssociationReport association_check(const RegularizedField& g1, const RegularizedField& g2,
                                    const TestFunction& phi, std::span<const double> eps_sequence,
                                    Eigen::Index ramp_segments) {
    if (eps_sequence.size() < 2) throw InvalidArgument("association check needs at least two epsilons");
    for (std::size_t k = 0; k < eps_sequence.size(); ++k) {
        if (!(eps_sequence[k] > 0.0)) throw InvalidArgument("epsilons must be positive");
        if (k > 0 && !(eps_sequence[k] < eps_sequence[k - 1])) {
            throw InvalidArgument("epsilon sequence must be strictly decreasing");
        }
    }
    if (ramp_segments < 1) throw InvalidArgument("ramp needs at least one segment");

    AssociationReport report;
    for (double eps : eps_sequence) {
        auto integrand = [&](double x) { return (g1(x, eps) - g2(x, eps)) * phi(x); };
        double pairing = 0.0;
        const double lo = phi.lo();
        const double hi = phi.hi();
        if (lo < 0.0) pairing += integrate_adaptive(integrand, lo, std::min(0.0, hi));
        if (hi > eps) pairing += integrate_adaptive(integrand, std::max(eps, lo), hi);
        for (Eigen::Index j = 0; j < ramp_segments; ++j) {
            const double a = std::max(lo, eps * static_cast<double>(j) / static_cast<double>(ramp_segments));
            const double b = std::min(hi, eps * static_cast<double>(j + 1) / static_cast<double>(ramp_segments));
            if (b > a) pairing += integrate(rule8(), integrand, a, b);
        }
        report.epsilons.push_back(eps);
        report.values.push_back(pairing);
    }

    const bool all_zero =
        std::all_of(report.values.begin(), report.values.end(), [](double v) { return v == 0.0; });
    if (all_zero) {
        report.order = std::numeric_limits<double>::infinity();
        report.tends_to_zero = true;
        return report;
    }

    const auto n = static_cast<Eigen::Index>(report.values.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd logs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        design(k, 0) = 1.0;
        design(k, 1) = std::log(report.epsilons[k]);
        logs(k) = std::log(std::max(std::abs(report.values[k]), 1e-300));
    }
    const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(logs);
    report.order = fit(1);
    const double first = std::abs(report.values.front());
    const double last = std::abs(report.values.back());
    const double ratio = report.epsilons.back() / report.epsilons.front();
    report.tends_to_zero = report.order >= 0.5 && last <= 10.0 * first * std::sqrt(ratio);
    return report;
}

double delta_pairing(const RegularizedStep& step, const TestFunction& phi) {
    const Eigen::VectorXd nodes = step.breakpoints();
    double total = 0.0;
    for (Eigen::Index j = 0; j + 1 < nodes.size(); ++j) {
        const double slope = step.profile().slope(j) / step.epsilon();
        if (slope == 0.0) continue;
        const double a = std::max(nodes(j), phi.lo());
        const double b = std::min(nodes(j + 1), phi.hi());
        if (b > a) total += slope * integrate(rule8(), [&](double x) { return phi(x); }, a, b);
    }
    return total;
}

double ramp_integral(std::span<const Profile> profiles, double epsilon,
                     const std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>& integrand) {
    if (profiles.empty()) throw InvalidArgument("ramp integral needs at least one profile");
    if (!(epsilon > 0.0)) throw InvalidArgument("ramp width must be positive");
    std::vector<Eigen::Index> counts;
    for (const auto& p : profiles) counts.push_back(p.segments());
    const Eigen::VectorXd nodes = union_nodes(counts) * epsilon;

    const auto n = static_cast<Eigen::Index>(profiles.size());
    Eigen::VectorXd values(n);
    Eigen::VectorXd slopes(n);
    double total = 0.0;
    for (Eigen::Index k = 0; k + 1 < nodes.size(); ++k) {
        const double lo = nodes(k);
        const double hi = nodes(k + 1);
        if (!(hi > lo)) continue;
        const double mid = 0.5 * (lo + hi) / epsilon;
        for (Eigen::Index i = 0; i < n; ++i) {
            slopes(i) = profiles[i].slope(segment_of(mid, profiles[i].segments())) / epsilon;
        }
        total += integrate(rule8(), [&](double x) {
            for (Eigen::Index i = 0; i < n; ++i) values(i) = profiles[i](x / epsilon);
            return integrand(values, slopes);
        }, lo, hi);
    }
    return total;
}

}  // namespace gfshock::gf
