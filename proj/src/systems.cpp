#include "gfshock/systems.hpp"

#include "gfshock/errors.hpp"
#include "gfshock/newton.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

namespace gfshock::systems {

namespace {

using Eigen::Vector4d;
using Eigen::VectorXd;

constexpr std::size_t kV = 0, kU = 1, kS = 2, kP = 3;

VectorXd scalar(double value) { return VectorXd::Constant(1, value); }

RiemannFan make_fan(VectorXd left, VectorXd right) {
    RiemannFan fan;
    fan.left = std::move(left);
    fan.right = std::move(right);
    return fan;
}

template <typename F>
double bracketed_root(F&& f, double lo, double hi, double f_lo, double f_hi) {
    boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 3);
    std::uintmax_t iterations = 300;
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iterations);
    return 0.5 * (a + b);
}

}  // namespace

// States ----------------------------------------------------------------------

EulerState EulerState::vacuum() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {0.0, nan, nan};
}

EulerState EulerState::from_pressure(double rho, double u, double p, double gamma) {
    return {rho, u, p / ((gamma - 1.0) * rho) + 0.5 * u * u};
}

EulerState EulerState::from_conservative(const Eigen::Vector3d& q) {
    if (q(0) < 0.0) throw InvalidArgument("negative density");
    if (q(0) == 0.0) return vacuum();
    return {q(0), q(1) / q(0), q(2) / q(0)};
}

Eigen::Vector3d EulerState::conservative() const {
    if (is_vacuum()) return Eigen::Vector3d::Zero();
    return {rho, rho * u, rho * e};
}

bool ElastoParams::plastic(double s) const { return std::abs(s) >= s0 * (1.0 - 1e-12); }

double ElastoParams::k2_of(double s) const { return plastic(s) ? 0.0 : k * k; }

// Burgers ---------------------------------------------------------------------

RiemannFan burgers_riemann(double u_left, double u_right) {
    RiemannFan fan = make_fan(scalar(u_left), scalar(u_right));
    if (u_left != u_right)
        fan.waves.push_back({jump::burgers_speed(u_left, u_right), fan.left, fan.right, WaveKind::Shock});
    return fan;
}

// k^2 model -------------------------------------------------------------------

K2Jump k2_hugoniot(const K2State& from, double v_to, int family, bool from_is_left, double k) {
    if (from.v <= 0.0 || v_to <= 0.0) throw InvalidArgument("specific volume must be positive");
    const double dv = from_is_left ? v_to - from.v : from.v - v_to;
    const double vbar = 0.5 * (from.v + v_to);
    const double du = -family * k * dv / std::sqrt(vbar);
    const double dsigma = k * k * dv / vbar;

    K2Jump out;
    out.state = from_is_left ? K2State{v_to, from.u + du, from.sigma + dsigma}
                             : K2State{v_to, from.u - du, from.sigma - dsigma};
    const K2State& left = from_is_left ? from : out.state;
    out.speed = left.u + family * k * left.v / std::sqrt(vbar);
    return out;
}

RiemannFan k2_riemann(const K2State& left, const K2State& right, double k) {
    if (!(k > 0.0)) throw InvalidArgument("k must be positive");
    if (left.v <= 0.0 || right.v <= 0.0) throw InvalidArgument("specific volume must be positive");
    RiemannFan fan = make_fan(left.vector(), right.vector());
    if (fan.left == fan.right) return fan;

    const double u_scale = k * std::sqrt(std::max(left.v, right.v));
    const double s_scale = k * k;
    auto residual = [&](const Eigen::Vector2d& x) -> Eigen::Vector2d {
        const K2Jump a = k2_hugoniot(left, x(0), -1, true, k);
        const K2Jump b = k2_hugoniot(right, x(1), +1, false, k);
        return {(a.state.u - b.state.u) / u_scale, (a.state.sigma - b.state.sigma) / s_scale};
    };
    auto admissible = [](const Eigen::Vector2d& x) { return x(0) > 0.0 && x(1) > 0.0; };
    const auto solved = damped_newton<2>(residual, Eigen::Vector2d(left.v, right.v), admissible);
    if (!solved.converged) throw NoAdmissibleMiddleState("k2 middle state: Newton iteration failed");

    const K2Jump a = k2_hugoniot(left, solved.x(0), -1, true, k);
    const K2Jump b = k2_hugoniot(right, solved.x(1), +1, false, k);
    const K2State mid_left = a.state;
    const K2State mid_right{solved.x(1), a.state.u, a.state.sigma};
    if (!(a.speed <= mid_left.u && mid_left.u <= b.speed))
        throw NoAdmissibleMiddleState("k2 middle state: waves out of order");

    if (mid_left.v != left.v) fan.waves.push_back({a.speed, fan.left, mid_left.vector(), WaveKind::Shock});
    if (mid_left.v != mid_right.v)
        fan.waves.push_back({mid_left.u, mid_left.vector(), mid_right.vector(), WaveKind::Contact});
    if (mid_right.v != right.v) fan.waves.push_back({b.speed, mid_right.vector(), fan.right, WaveKind::Shock});
    return fan;
}

// Fractional-step Euler ---------------------------------------------------------

RiemannFan pressureless_riemann(const EulerState& left, const EulerState& right) {
    const Eigen::Vector3d ql = left.conservative();
    const Eigen::Vector3d qr = right.conservative();
    RiemannFan fan = make_fan(ql, qr);
    if (ql == qr) return fan;
    const VectorXd zero = Eigen::Vector3d::Zero();

    if (left.is_vacuum()) {
        fan.waves.push_back({right.u, zero, fan.right, WaveKind::Contact});
    } else if (right.is_vacuum()) {
        fan.waves.push_back({left.u, fan.left, zero, WaveKind::Contact});
    } else if (left.u < right.u) {
        fan.waves.push_back({left.u, fan.left, zero, WaveKind::Contact});
        fan.waves.push_back({right.u, zero, fan.right, WaveKind::Contact});
    } else if (left.u == right.u) {
        fan.waves.push_back({left.u, fan.left, fan.right, WaveKind::Contact});
    } else {
        const double wl = std::sqrt(left.rho);
        const double wr = std::sqrt(right.rho);
        const double c = (wl * left.u + wr * right.u) / (wl + wr);
        const Eigen::Vector3d flux_l = ql * left.u;
        const Eigen::Vector3d flux_r = qr * right.u;
        fan.waves.push_back({c, fan.left, fan.right, WaveKind::Shock});
        fan.delta = DeltaRecord{c, c * (qr - ql) - (flux_r - flux_l)};
    }
    return fan;
}

RiemannFan pressure_step_riemann(double rho_left, VelocityEnergy left, double rho_right, VelocityEnergy right,
                                 double gamma) {
    if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
    if (!(rho_left > 0.0) || !(rho_right > 0.0)) throw InvalidArgument("pressure step needs positive density");
    const double pl = gamma_law(rho_left, left.e, left.u, gamma);
    const double pr = gamma_law(rho_right, right.e, right.u, gamma);
    if (!(pl > 0.0) || !(pr > 0.0)) throw InvalidArgument("pressure step needs positive pressure");

    const Eigen::Vector3d ql(rho_left, rho_left * left.u, rho_left * left.e);
    const Eigen::Vector3d qr(rho_right, rho_right * right.u, rho_right * right.e);
    RiemannFan fan = make_fan(ql, qr);
    if (ql == qr) return fan;

    // velocity change across an acoustic wave from (rho, p_outer) to p
    auto swing = [gamma](double rho, double p_outer, double p) {
        return (p - p_outer) / std::sqrt(0.5 * rho * (gamma - 1.0) * (p_outer + p));
    };
    auto g = [&](double p) { return swing(rho_left, pl, p) + swing(rho_right, pr, p) - (left.u - right.u); };

    const double g0 = g(0.0);
    if (g0 >= 0.0) throw NoAdmissibleMiddleState("pressure step: middle pressure would be nonpositive");
    double hi = std::max(pl, pr);
    double g_hi = g(hi);
    for (int guard = 0; g_hi <= 0.0; ++guard) {
        if (guard > 2000) throw NoAdmissibleMiddleState("pressure step: no bracket for the middle pressure");
        hi *= 2.0;
        g_hi = g(hi);
    }
    const double p_star = bracketed_root(g, 0.0, hi, g0, g_hi);
    // averaged so that mirror-symmetric data give exactly zero
    const double u_star = 0.5 * ((left.u - swing(rho_left, pl, p_star)) + (right.u + swing(rho_right, pr, p_star)));

    const double c_left = -std::sqrt(0.5 * (gamma - 1.0) * (pl + p_star) / rho_left);
    const double c_right = std::sqrt(0.5 * (gamma - 1.0) * (pr + p_star) / rho_right);
    auto middle = [&](double rho) -> VectorXd {
        return Eigen::Vector3d(rho, rho * u_star, p_star / (gamma - 1.0) + 0.5 * rho * u_star * u_star);
    };
    const VectorXd ml = middle(rho_left);
    const VectorXd mr = middle(rho_right);

    if (ml != fan.left) fan.waves.push_back({c_left, fan.left, ml, WaveKind::Shock});
    if (rho_left != rho_right) fan.waves.push_back({0.0, ml, mr, WaveKind::Contact});
    if (mr != fan.right) fan.waves.push_back({c_right, mr, fan.right, WaveKind::Shock});
    return fan;
}

RiemannFan pressure_step_riemann(double rho, VelocityEnergy left, VelocityEnergy right, double gamma) {
    return pressure_step_riemann(rho, left, rho, right, gamma);
}

// Elastoplastic splitting -------------------------------------------------------

RiemannFan elasto_transport_riemann(const ElastoState& left, const ElastoState& right) {
    RiemannFan fan = make_fan(left.vector(), right.vector());
    if (fan.left != fan.right)
        fan.waves.push_back({jump::burgers_speed(left.u, right.u), fan.left, fan.right, WaveKind::Shock});
    return fan;
}

namespace {

struct Front {
    double speed = 0.0;
    Vector4d inner;
    Vector4d knot = Vector4d::Zero();
};

// Jumps inner - outer of v and p for a front of speed c and velocity jump du.
double volume_jump(double v, double c, double du) { return -v * du / (c + 0.5 * du); }
double pressure_jump(double p, double c, double du, double gamma) { return gamma * p * du / (c - 0.5 * gamma * du); }

// Solves h(c) = 0 on (edge, infinity) where h -> -infinity (compression) or is
// finite (expansion) at the edge and positive for large c.
template <typename H>
std::optional<double> outward_speed(H&& h, double edge, double start) {
    double hi = std::max(start, 2.0 * edge + 1e-300);
    double h_hi = h(hi);
    for (int guard = 0; !(h_hi > 0.0); ++guard) {
        if (guard > 200) return std::nullopt;
        hi *= 2.0;
        h_hi = h(hi);
    }
    double lo = edge;
    double h_lo = h(lo);
    if (!std::isfinite(h_lo)) {
        // singular at the edge: approach it from above
        double gap = hi - edge;
        do {
            gap *= 0.5;
            lo = edge + gap;
            h_lo = h(lo);
            if (h_lo > 0.0) {
                hi = lo;
                h_hi = h_lo;
            }
        } while (!(h_lo < 0.0) && gap > edge * 1e-15);
    }
    if (!(h_lo < 0.0)) return std::nullopt;
    return bracketed_root(h, lo, hi, h_lo, h_hi);
}

/// Single front with stress modulus kk (k^2 elastic, 0 plastic) moving away from
/// `outer` on `side` (-1 left, +1 right); du = u_inner - u_outer.
std::optional<Front> single_front(const Vector4d& outer, double du, double kk, int side, double gamma) {
    const double v = outer(kV);
    const double p = outer(kP);
    const double acoustic = std::sqrt(v * (gamma * p + kk));
    if (du == 0.0) return Front{side * acoustic, outer};

    // the speed equation is invariant under (c, du) -> (-c, -du), so work on the right
    const double d = side * du;
    auto h = [&](double c) { return c * (c + 0.5 * d) - v * kk - v * gamma * p * c / (c - 0.5 * gamma * d); };
    const double edge = 0.5 * std::max(gamma, 1.0) * std::abs(d);
    const auto root = outward_speed(h, edge, acoustic + (gamma + 1.0) * std::abs(d));
    if (!root) return std::nullopt;

    const double c = side * *root;
    Front front{c, outer};
    front.inner(kV) += volume_jump(v, c, du);
    front.inner(kU) += du;
    if (kk != 0.0) front.inner(kS) -= kk * du / c;
    front.inner(kP) += pressure_jump(p, c, du, gamma);
    if (!(front.inner(kV) > 0.0) || !(front.inner(kP) > 0.0)) return std::nullopt;
    return front;
}

/// Merged front: an elastic part carrying s to s_cap and a plastic part at the
/// same speed. Each part keeps its own v and p relations; momentum balances over
/// the whole front, so the front coincides with the precursor-plastic pair when
/// both speeds agree.
std::optional<Front> merged_front(const Vector4d& outer, double du, double s_cap, int side,
                                  const ElastoParams& params) {
    const double v = outer(kV);
    const double p = outer(kP);
    const double kk = params.k * params.k;
    const double gamma = params.gamma;
    const double ds = s_cap - outer(kS);
    const double d = side * du;
    if (!(ds * d < 0.0)) return std::nullopt;

    struct Parts {
        double de, dve, dpe, dvp, dpp;
    };
    auto parts = [&](double c) {
        Parts q{};
        q.de = -c * ds / kk;
        q.dve = volume_jump(v, c, q.de);
        q.dpe = pressure_jump(p, c, q.de, gamma);
        q.dvp = volume_jump(v + q.dve, c, d - q.de);
        q.dpp = pressure_jump(p + q.dpe, c, d - q.de, gamma);
        return q;
    };
    auto hm = [&](double c) {
        const Parts q = parts(c);
        return -c * d + (v + 0.5 * q.dve) * (q.dpe - ds) + (v + q.dve + 0.5 * q.dvp) * q.dpp;
    };
    auto admissible = [&](double c) {
        const Parts q = parts(c);
        const double g = std::max(gamma, 1.0);
        return c > 0.5 * g * std::abs(q.de) && c > 0.5 * g * std::abs(d - q.de) && v + q.dve > 0.0 &&
               p + q.dpe > 0.0 && v + q.dve + q.dvp > 0.0 && p + q.dpe + q.dpp > 0.0;
    };

    // scan down from the all-elastic speed for the fastest admissible root
    const double c_max = kk * std::abs(d / ds);
    constexpr int samples = 400;
    double hi = c_max;
    if (!admissible(hi)) return std::nullopt;
    double h_hi = hm(hi);
    std::optional<double> root;
    if (h_hi == 0.0) root = hi;
    for (int n = 1; n <= samples && !root; ++n) {
        const double lo = c_max * (1.0 - double(n) / samples);
        if (!(lo > 0.0) || !admissible(lo)) break;
        const double h_lo = hm(lo);
        if (h_lo == 0.0) root = lo;
        else if ((h_lo < 0.0) != (h_hi < 0.0)) root = bracketed_root(hm, lo, hi, h_lo, h_hi);
        hi = lo;
        h_hi = h_lo;
    }
    if (!root) return std::nullopt;

    const Parts q = parts(*root);
    Front front{side * *root, outer, outer};
    front.knot(kV) += q.dve;
    front.knot(kU) += side * q.de;
    front.knot(kS) = s_cap;
    front.knot(kP) += q.dpe;
    front.inner(kV) += q.dve + q.dvp;
    front.inner(kU) += du;
    front.inner(kS) = s_cap;
    front.inner(kP) += q.dpe + q.dpp;
    return front;
}

struct SidePiece {
    double speed;
    Vector4d outer;
    Vector4d inner;
    WaveKind kind;
    Vector4d knot = Vector4d::Zero();
};

struct SideResponse {
    std::vector<SidePiece> pieces;  ///< from the outer state inwards
    Vector4d inner;
};

std::optional<SideResponse> respond(const Vector4d& outer, double u_star, int side, const ElastoParams& params) {
    const double du = u_star - outer(kU);
    if (du == 0.0) return SideResponse{{}, outer};
    const double kk = params.k * params.k;
    const double s_outer = outer(kS);

    const auto elastic = single_front(outer, du, kk, side, params.gamma);
    if (params.plastic(s_outer)) {
        if (elastic && (elastic->inner(kS) - s_outer) * s_outer < 0.0 && !params.plastic(elastic->inner(kS)))
            return SideResponse{{{elastic->speed, outer, elastic->inner, WaveKind::Elastic}}, elastic->inner};
        auto plastic = single_front(outer, du, 0.0, side, params.gamma);
        if (!plastic) return std::nullopt;
        plastic->inner(kS) = s_outer;
        return SideResponse{{{plastic->speed, outer, plastic->inner, WaveKind::Plastic}}, plastic->inner};
    }
    if (!elastic) return std::nullopt;
    if (std::abs(elastic->inner(kS)) <= params.s0)
        return SideResponse{{{elastic->speed, outer, elastic->inner, WaveKind::Elastic}}, elastic->inner};

    const double s_cap = std::copysign(params.s0, elastic->inner(kS));
    auto overshoot = [&](double t) {
        const auto front = single_front(outer, t * du, kk, side, params.gamma);
        return front ? front->inner(kS) - s_cap : std::numeric_limits<double>::quiet_NaN();
    };
    const double t_cap = bracketed_root(overshoot, 0.0, 1.0, s_outer - s_cap, elastic->inner(kS) - s_cap);
    auto precursor = single_front(outer, t_cap * du, kk, side, params.gamma);
    if (!precursor) return std::nullopt;
    precursor->inner(kS) = s_cap;

    auto plastic = single_front(precursor->inner, u_star - precursor->inner(kU), 0.0, side, params.gamma);
    if (plastic && std::abs(plastic->speed) < std::abs(precursor->speed)) {
        plastic->inner(kS) = s_cap;
        return SideResponse{{{precursor->speed, outer, precursor->inner, WaveKind::Elastic},
                             {plastic->speed, precursor->inner, plastic->inner, WaveKind::Plastic}},
                            plastic->inner};
    }
    const auto merged = merged_front(outer, du, s_cap, side, params);
    if (!merged) return std::nullopt;
    return SideResponse{{{merged->speed, outer, merged->inner, WaveKind::ElastoPlastic, merged->knot}},
                        merged->inner};
}

}  // namespace

RiemannFan elasto_force_riemann(const ElastoState& left, const ElastoState& right, const ElastoParams& params) {
    if (!(params.gamma > 1.0) || !(params.k > 0.0) || !(params.s0 > 0.0))
        throw InvalidArgument("elasto parameters need gamma > 1, k > 0, s0 > 0");
    if (!(left.v > 0.0) || !(right.v > 0.0) || !(left.p > 0.0) || !(right.p > 0.0))
        throw InvalidArgument("elasto force step needs positive v and p");
    RiemannFan fan = make_fan(left.vector(), right.vector());
    if (fan.left == fan.right) return fan;

    const Vector4d wl = left.vector();
    const Vector4d wr = right.vector();
    const double scale = 1.0 + std::abs(left.sigma()) + std::abs(right.sigma()) + left.p + right.p;
    auto mismatch = [&](double u_star) {
        const auto a = respond(wl, u_star, -1, params);
        const auto b = respond(wr, u_star, +1, params);
        if (!a || !b) return std::numeric_limits<double>::quiet_NaN();
        return ((a->inner(kS) - a->inner(kP)) - (b->inner(kS) - b->inner(kP))) / scale;
    };

    auto impedance = [&](const ElastoState& w) {
        return std::sqrt(w.v * (params.gamma * w.p + params.k2_of(w.s))) / w.v;
    };
    const double zl = impedance(left);
    const double zr = impedance(right);
    const double guess = (right.sigma() - left.sigma() + zl * left.u + zr * right.u) / (zl + zr);

    auto residual = [&](const Eigen::Matrix<double, 1, 1>& x) {
        return Eigen::Matrix<double, 1, 1>(mismatch(x(0)));
    };
    auto anywhere = [](const Eigen::Matrix<double, 1, 1>&) { return true; };
    const auto newton = damped_newton<1>(residual, Eigen::Matrix<double, 1, 1>(guess), anywhere);
    double u_star = newton.x(0);
    if (!newton.converged) {
        // the mismatch increases with u*: expand a bracket around the guess
        const double width = 1.0 + std::abs(left.u - right.u) + std::abs(right.sigma() - left.sigma()) / (zl + zr);
        double lo = guess - width;
        double hi = guess + width;
        double f_lo = mismatch(lo);
        double f_hi = mismatch(hi);
        for (int guard = 0; !(f_lo < 0.0) || !(f_hi > 0.0); ++guard) {
            if (guard > 60) throw NoAdmissibleMiddleState(
                    "elasto force step: no middle velocity keeps v and p positive on both sides");
            if (!(f_lo < 0.0)) {
                hi = std::isnan(f_lo) ? hi : lo;
                f_hi = std::isnan(f_lo) ? f_hi : f_lo;
                lo = std::isnan(f_lo) ? 0.5 * (lo + guess) : lo - (hi - lo);
                f_lo = mismatch(lo);
            }
            if (!(f_hi > 0.0)) {
                lo = std::isnan(f_hi) ? lo : hi;
                f_lo = std::isnan(f_hi) ? f_lo : f_hi;
                hi = std::isnan(f_hi) ? 0.5 * (hi + guess) : hi + (hi - lo);
                f_hi = mismatch(hi);
            }
        }
        u_star = bracketed_root(mismatch, lo, hi, f_lo, f_hi);
    }

    auto a = respond(wl, u_star, -1, params);
    auto b = respond(wr, u_star, +1, params);
    if (!a || !b) throw NoAdmissibleMiddleState("elasto force step: no admissible middle state");
    if (!(std::abs(mismatch(u_star)) <= 1e-9))
        throw NoAdmissibleMiddleState("elasto force step: the stress balance has no root");
    a->inner(kU) = u_star;
    b->inner(kU) = u_star;
    if (!a->pieces.empty()) a->pieces.back().inner(kU) = u_star;
    if (!b->pieces.empty()) b->pieces.back().inner(kU) = u_star;

    for (const auto& piece : a->pieces) {
        Wave wave{piece.speed, piece.outer, piece.inner, piece.kind};
        if (piece.kind == WaveKind::ElastoPlastic) wave.knot = piece.knot;
        fan.waves.push_back(std::move(wave));
    }
    if (a->inner != b->inner) fan.waves.push_back({0.0, a->inner, b->inner, WaveKind::Contact});
    for (auto it = b->pieces.rbegin(); it != b->pieces.rend(); ++it) {
        Wave wave{it->speed, it->inner, it->outer, it->kind};
        if (it->kind == WaveKind::ElastoPlastic) wave.knot = it->knot;
        fan.waves.push_back(std::move(wave));
    }
    return fan;
}

// Equations -----------------------------------------------------------------------

jump::EquationSet burgers_equations() {
    return {{"u", {jump::dt(0), jump::dx(0, [](const VectorXd& w) { return w(0); })}}};
}

jump::EquationSet k2_equations(double k) {
    const double kk = k * k;
    auto u = [](const VectorXd& w) { return w(1); };
    auto minus_v = [](const VectorXd& w) { return -w(0); };
    return {
        {"v", {jump::dt(0), jump::dx(0, u), jump::dx(1, minus_v)}},
        {"u", {jump::dt(1), jump::dx(1, u), jump::dx(2, minus_v)}},
        {"sigma", {jump::dt(2), jump::dx(2, u), jump::dx(1, -kk)}},
    };
}

jump::EquationSet pressureless_equations() {
    return {
        {"mass", {jump::dt(0), jump::dx(1, 1.0)}},
        {"momentum",
         {jump::dt(1), jump::dx(0, [](const VectorXd& q) { return -q(1) * q(1) / (q(0) * q(0)); }),
          jump::dx(1, [](const VectorXd& q) { return 2.0 * q(1) / q(0); })}},
        {"energy",
         {jump::dt(2), jump::dx(0, [](const VectorXd& q) { return -q(2) * q(1) / (q(0) * q(0)); }),
          jump::dx(1, [](const VectorXd& q) { return q(2) / q(0); }),
          jump::dx(2, [](const VectorXd& q) { return q(1) / q(0); })}},
    };
}

jump::EquationSet pressure_step_equations(double gamma) {
    const double g1 = gamma - 1.0;
    auto pressure = [g1](const VectorXd& q) { return g1 * (q(2) - 0.5 * q(1) * q(1) / q(0)); };
    auto dp_drho = [g1](const VectorXd& q) { return 0.5 * g1 * q(1) * q(1) / (q(0) * q(0)); };
    auto dp_dm = [g1](const VectorXd& q) { return -g1 * q(1) / q(0); };
    return {
        {"density", {jump::dt(0)}},
        {"momentum", {jump::dt(1), jump::dx(0, dp_drho), jump::dx(1, dp_dm), jump::dx(2, g1)}},
        {"energy",
         {jump::dt(2),
          jump::dx(0, [=](const VectorXd& q) { return dp_drho(q) * q(1) / q(0) - pressure(q) * q(1) / (q(0) * q(0)); }),
          jump::dx(1, [=](const VectorXd& q) { return dp_dm(q) * q(1) / q(0) + pressure(q) / q(0); }),
          jump::dx(2, [g1](const VectorXd& q) { return g1 * q(1) / q(0); })}},
    };
}

jump::EquationSet elasto_transport_equations() {
    auto u = [](const VectorXd& w) { return w(1); };
    return {
        {"v", {jump::dt(0), jump::dx(0, u)}},
        {"u", {jump::dt(1), jump::dx(1, u)}},
        {"s", {jump::dt(2), jump::dx(2, u)}},
        {"p", {jump::dt(3), jump::dx(3, u)}},
    };
}

jump::EquationSet elasto_force_equations(const ElastoParams& params) {
    auto v = [](const VectorXd& w) { return w(0); };
    auto minus_v = [](const VectorXd& w) { return -w(0); };
    const double gamma = params.gamma;
    return {
        {"v", {jump::dt(0), jump::dx(1, minus_v)}},
        {"u", {jump::dt(1), jump::dx(3, v), jump::dx(2, minus_v)}},
        {"s", {jump::dt(2), jump::dx(1, [params](const VectorXd& w) { return -params.k2_of(w(2)); })}},
        {"p", {jump::dt(3), jump::dx(1, [gamma](const VectorXd& w) { return gamma * w(3); })}},
    };
}

jump::ShockAnsatz wave_ansatz(const Wave& wave, Eigen::Index segments) {
    if (wave.kind != WaveKind::ElastoPlastic)
        return jump::ShockAnsatz::shared(wave.left, wave.right, wave.speed, gf::Profile::linear(segments));

    const Eigen::Index m = segments;
    const Eigen::Index j_knot = m / 2;
    jump::ShockAnsatz ansatz = jump::ShockAnsatz::shared(wave.left, wave.right, wave.speed, gf::Profile::linear(m));
    for (Eigen::Index i = 0; i < wave.left.size(); ++i) {
        const double jump = wave.right(i) - wave.left(i);
        const double at_knot = jump != 0.0 ? std::clamp((wave.knot(i) - wave.left(i)) / jump, 0.0, 1.0) : 0.5;
        VectorXd values(m + 1);
        for (Eigen::Index j = 0; j <= m; ++j)
            values(j) = j <= j_knot ? at_knot * double(j) / double(j_knot)
                                    : at_knot + (1.0 - at_knot) * double(j - j_knot) / double(m - j_knot);
        ansatz.profiles[static_cast<std::size_t>(i)] = gf::Profile(values);
    }
    return ansatz;
}

// Solver objects ----------------------------------------------------------------------

RiemannFan BurgersSolver::solve(const VectorXd& left, const VectorXd& right) const {
    return burgers_riemann(left(0), right(0));
}

K2Solver::K2Solver(double k) : k_(k) {
    if (!(k > 0.0)) throw InvalidArgument("k must be positive");
}

RiemannFan K2Solver::solve(const VectorXd& left, const VectorXd& right) const {
    return k2_riemann(K2State::from_vector(left), K2State::from_vector(right), k_);
}

RiemannFan PressurelessSolver::solve(const VectorXd& left, const VectorXd& right) const {
    return pressureless_riemann(EulerState::from_conservative(left), EulerState::from_conservative(right));
}

PressureStepSolver::PressureStepSolver(double gamma) : gamma_(gamma) {
    if (!(gamma > 1.0)) throw InvalidArgument("gamma must exceed 1");
}

RiemannFan PressureStepSolver::solve(const VectorXd& left, const VectorXd& right) const {
    if (!(left(0) > 0.0) || !(right(0) > 0.0))
        throw NoAdmissibleMiddleState("pressure step reached a vacuum cell");
    return pressure_step_riemann(left(0), {left(1) / left(0), left(2) / left(0)}, right(0),
                                 {right(1) / right(0), right(2) / right(0)}, gamma_);
}

RiemannFan ElastoTransportSolver::solve(const VectorXd& left, const VectorXd& right) const {
    return elasto_transport_riemann(ElastoState::from_vector(left), ElastoState::from_vector(right));
}

ElastoForceSolver::ElastoForceSolver(ElastoParams params) : params_(params) {
    if (!(params.gamma > 1.0) || !(params.k > 0.0) || !(params.s0 > 0.0))
        throw InvalidArgument("elasto parameters need gamma > 1, k > 0, s0 > 0");
}

RiemannFan ElastoForceSolver::solve(const VectorXd& left, const VectorXd& right) const {
    return elasto_force_riemann(ElastoState::from_vector(left), ElastoState::from_vector(right), params_);
}

RiemannFan IdentitySolver::solve(const VectorXd& left, const VectorXd& right) const {
    return make_fan(left, right);
}

RiemannFan LinearAdvectionSolver::solve(const VectorXd& left, const VectorXd& right) const {
    RiemannFan fan = make_fan(left, right);
    if (left != right) fan.waves.push_back({speed_, left, right, WaveKind::Contact});
    return fan;
}

}  // namespace gfshock::systems
