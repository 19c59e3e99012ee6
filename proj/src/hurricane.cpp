#include "gfshock/hurricane.hpp"

#include "gfshock/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace gfshock::hurricane {

using Eigen::Index;
using Eigen::Vector2d;

WindField WindField::uniform(Index nx, Index ny, double dx, double dy, double x0, double y0) {
    if (nx < 2 || ny < 2) throw InvalidArgument("wind field needs at least 2 x 2 nodes");
    if (!(dx > 0.0) || !(dy > 0.0)) throw InvalidArgument("grid spacings must be positive");
    WindField field;
    field.nx = nx;
    field.ny = ny;
    field.dx = dx;
    field.dy = dy;
    field.x0 = x0;
    field.y0 = y0;
    field.u = Eigen::MatrixXd::Zero(nx, ny);
    field.v = Eigen::MatrixXd::Zero(nx, ny);
    return field;
}

Vector2d WindField::at(double px, double py) const {
    const double sx = std::clamp((px - x0) / dx, 0.0, double(nx - 1));
    const double sy = std::clamp((py - y0) / dy, 0.0, double(ny - 1));
    const Index i = std::min<Index>(static_cast<Index>(sx), nx - 2);
    const Index j = std::min<Index>(static_cast<Index>(sy), ny - 2);
    const double tx = sx - double(i);
    const double ty = sy - double(j);
    auto lerp = [](double a, double b, double t) { return a + t * (b - a); };
    auto blend = [&](const Eigen::MatrixXd& f) {
        return lerp(lerp(f(i, j), f(i + 1, j), tx), lerp(f(i, j + 1), f(i + 1, j + 1), tx), ty);
    };
    return {blend(u), blend(v)};
}

double WindField::max_speed() const { return (u.array().square() + v.array().square()).sqrt().maxCoeff(); }

void WindField::validate() const {
    if (!(dx > 0.0) || !(dy > 0.0)) throw InvalidArgument("grid spacings must be positive");
    if (u.rows() != nx || u.cols() != ny || v.rows() != nx || v.cols() != ny)
        throw InvalidArgument("wind components do not match the grid size");
    if (!u.allFinite() || !v.allFinite()) throw InvalidArgument("wind field holds non-finite values");
}

const Coefficients& HurricaneParams::at(double t) const {
    const Coefficients* current = &base;
    for (const auto& [start, coefficients] : schedule)
        if (start <= t) current = &coefficients;
    return *current;
}

void HurricaneParams::validate() const {
    auto check = [](const Coefficients& c) {
        if (!(c.mu >= 0.0) || !(c.k >= 0.0)) throw InvalidArgument("friction and vertical coefficients must be >= 0");
    };
    check(base);
    for (std::size_t n = 0; n < schedule.size(); ++n) {
        check(schedule[n].second);
        if (n > 0 && schedule[n].first < schedule[n - 1].first)
            throw InvalidArgument("coefficient schedule must be sorted by time");
    }
}

Vector2d source_exact(const Vector2d& velocity, const Coefficients& c, double dt) {
    const Vector2d w = velocity - c.trade;
    const double scale = std::exp((c.k - c.mu) * dt);
    const double angle = c.omega * dt;
    const double cs = std::cos(angle);
    const double sn = std::sin(angle);
    return c.trade + scale * Vector2d(cs * w(0) + sn * w(1), -sn * w(0) + cs * w(1));
}

Vector2d backtrack(const WindField& field, double x, double y, double dt) {
    const Vector2d here(x, y);
    const Vector2d mid = here - 0.5 * dt * field.at(x, y);
    const Vector2d departure = here - dt * field.at(mid(0), mid(1));
    return {std::clamp(departure(0), field.x(0), field.x(field.nx - 1)),
            std::clamp(departure(1), field.y(0), field.y(field.ny - 1))};
}

WindField hurricane_step(const WindField& field, const HurricaneParams& params, double dt) {
    field.validate();
    if (!(dt >= 0.0)) throw InvalidArgument("time step must be nonnegative");
    const double reach = dt * field.max_speed();
    if (reach > std::min(field.dx, field.dy)) {
        std::ostringstream msg;
        msg << "semi-Lagrangian displacement " << reach << " exceeds the grid spacing "
            << std::min(field.dx, field.dy);
        throw StabilityViolation(msg.str());
    }
    const Coefficients& coefficients = params.at(field.time);
    WindField out = field;
    for (Index j = 0; j < field.ny; ++j)
        for (Index i = 0; i < field.nx; ++i) {
            const Vector2d departure = backtrack(field, field.x(i), field.y(j), dt);
            const Vector2d w = source_exact(field.at(departure(0), departure(1)), coefficients, dt);
            out.u(i, j) = w(0);
            out.v(i, j) = w(1);
        }
    out.time = field.time + dt;
    return out;
}

namespace {

template <typename Tangential>
void add_vortex(WindField& field, const Vector2d& center, Tangential&& tangential) {
    for (Index j = 0; j < field.ny; ++j)
        for (Index i = 0; i < field.nx; ++i) {
            const double rx = field.x(i) - center(0);
            const double ry = field.y(j) - center(1);
            const double r = std::hypot(rx, ry);
            if (r == 0.0) continue;
            const double speed = tangential(r);
            field.u(i, j) += -speed * ry / r;
            field.v(i, j) += speed * rx / r;
        }
}

}  // namespace

void add_ring_vortex(WindField& field, Vector2d center, double eye_radius, double outer_radius, double speed) {
    if (!(0.0 <= eye_radius && eye_radius < outer_radius)) throw InvalidArgument("ring radii must satisfy 0 <= eye < outer");
    add_vortex(field, center, [&](double r) { return r > eye_radius && r < outer_radius ? speed : 0.0; });
}

void add_smooth_vortex(WindField& field, Vector2d center, double radius, double speed) {
    if (!(radius > 0.0)) throw InvalidArgument("vortex radius must be positive");
    add_vortex(field, center, [&](double r) {
        const double s = r / radius;
        return speed * s * std::exp(0.5 * (1.0 - s * s));
    });
}

void add_solid_body(WindField& field, Vector2d center, double rate) {
    add_vortex(field, center, [&](double r) { return rate * r; });
}

void fill_trade(WindField& field, const Vector2d& trade) {
    field.u.setConstant(trade(0));
    field.v.setConstant(trade(1));
}

EyeSample eye_location(const WindField& field, const Vector2d& trade) {
    const Eigen::ArrayXXd speed =
        ((field.u.array() - trade(0)).square() + (field.v.array() - trade(1)).square()).sqrt();
    const double peak = speed.maxCoeff();
    EyeSample sample{field.time, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    if (!(peak > 0.0)) return sample;

    Index i_lo = field.nx, i_hi = -1, j_lo = field.ny, j_hi = -1;
    Vector2d centroid = Vector2d::Zero();
    double weight = 0.0;
    for (Index j = 0; j < field.ny; ++j)
        for (Index i = 0; i < field.nx; ++i)
            if (speed(i, j) > 0.5 * peak) {
                i_lo = std::min(i_lo, i);
                i_hi = std::max(i_hi, i);
                j_lo = std::min(j_lo, j);
                j_hi = std::max(j_hi, j);
                centroid += speed(i, j) * Vector2d(field.x(i), field.y(j));
                weight += speed(i, j);
            }
    centroid /= weight;
    // ties (a calm eye and calm corners) go to the node nearest the centroid
    const double tie = 1e-12 * peak;
    double best = std::numeric_limits<double>::infinity();
    double best_distance = std::numeric_limits<double>::infinity();
    for (Index j = j_lo; j <= j_hi; ++j)
        for (Index i = i_lo; i <= i_hi; ++i) {
            const double distance = (Vector2d(field.x(i), field.y(j)) - centroid).norm();
            if (speed(i, j) < best - tie || (speed(i, j) <= best + tie && distance < best_distance)) {
                best = std::min(best, speed(i, j));
                best_distance = distance;
                sample.x = field.x(i);
                sample.y = field.y(j);
            }
        }
    return sample;
}

HurricaneRun run(const WindField& initial, const HurricaneParams& params, double dt, double end_time,
                 std::vector<double> output_times) {
    params.validate();
    if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
    std::sort(output_times.begin(), output_times.end());

    HurricaneRun result;
    WindField field = initial;
    std::size_t next = 0;
    auto record = [&] {
        while (next < output_times.size() && output_times[next] <= field.time) {
            if (result.snapshots.empty() || result.snapshots.back().time != field.time)
                result.snapshots.push_back(field);
            ++next;
        }
    };
    record();
    result.track.push_back(eye_location(field, params.at(field.time).trade));

    while (field.time < end_time) {
        double target = end_time;
        if (next < output_times.size()) target = std::min(target, output_times[next]);
        double step = dt;
        const bool lands = field.time + step >= target;
        if (lands) step = target - field.time;
        field = hurricane_step(field, params, step);
        if (lands) field.time = target;
        ++result.steps;
        result.track.push_back(eye_location(field, params.at(field.time).trade));
        record();
    }
    if (result.snapshots.empty() || result.snapshots.back().time != field.time) result.snapshots.push_back(field);
    return result;
}

void write_field_csv(std::ostream& out, const WindField& field) {
    out << "x,y,u,v\n" << std::setprecision(17);
    for (Index j = 0; j < field.ny; ++j)
        for (Index i = 0; i < field.nx; ++i)
            out << field.x(i) << ',' << field.y(j) << ',' << field.u(i, j) << ',' << field.v(i, j) << '\n';
}

void write_track_csv(std::ostream& out, const std::vector<EyeSample>& track) {
    out << "t,x_min_speed,y_min_speed\n" << std::setprecision(17);
    for (const auto& s : track) out << s.t << ',' << s.x << ',' << s.y << '\n';
}

}  // namespace gfshock::hurricane
