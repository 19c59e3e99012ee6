#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gfshock/errors.hpp"
#include "gfshock/systems.hpp"

#include <cmath>
#include <random>

using namespace gfshock;
using namespace gfshock::systems;

namespace {

double max_residual(const RiemannFan& fan, const jump::EquationSet& equations) {
    double worst = 0.0;
    for (const auto& wave : fan.waves) {
        const auto a = wave_ansatz(wave);
        worst = std::max(worst, jump::regularized_residuals(equations, a).lpNorm<Eigen::Infinity>());
        if (wave.kind != WaveKind::ElastoPlastic)
            worst = std::max(worst, jump::assoc_jump_residuals(equations, a).lpNorm<Eigen::Infinity>());
    }
    return worst;
}

// Outer k2 states reached from a chosen middle through the jump formulas.
struct K2Case {
    K2State left, right, mid_left, mid_right;
};

K2Case k2_case(std::mt19937_64& rng, double k) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    K2Case c;
    c.mid_left = {0.5 + uni(rng), uni(rng) - 0.5, uni(rng) - 0.5};
    c.mid_right = {0.5 + uni(rng), c.mid_left.u, c.mid_left.sigma};
    const double vl = c.mid_left.v * (0.6 + 0.8 * uni(rng));
    const double vr = c.mid_right.v * (0.6 + 0.8 * uni(rng));
    // left-facing wave: du = k dv / sqrt(vbar), dsigma = k^2 dv / vbar
    const double dvl = c.mid_left.v - vl, vbl = 0.5 * (vl + c.mid_left.v);
    c.left = {vl, c.mid_left.u - k * dvl / std::sqrt(vbl), c.mid_left.sigma - k * k * dvl / vbl};
    const double dvr = vr - c.mid_right.v, vbr = 0.5 * (vr + c.mid_right.v);
    c.right = {vr, c.mid_right.u - k * dvr / std::sqrt(vbr), c.mid_right.sigma + k * k * dvr / vbr};
    return c;
}

}  // namespace

TEST_CASE("gamma law") {
    CHECK(gamma_law(1.0, 1.0, 0.0, 1.4) == doctest::Approx(0.4));
    CHECK(gamma_law(1.0, 0.5, 1.0, 1.4) == 0.0);
    CHECK(gamma_law(2.0, 1.5, 1.0, 1.4) == doctest::Approx(2.0 * gamma_law(1.0, 1.5, 1.0, 1.4)));
    const auto s = EulerState::from_pressure(2.0, 0.5, 1.0, 1.4);
    CHECK(s.pressure(1.4) == doctest::Approx(1.0));
    CHECK(EulerState::vacuum().conservative().isZero());
}

TEST_CASE("burgers fans") {
    const auto shock = burgers_riemann(1.0, 0.0);
    REQUIRE(shock.waves.size() == 1);
    CHECK(shock.waves[0].speed == 0.5);
    CHECK(burgers_riemann(0.3, 0.3).empty());
    const auto expansive = burgers_riemann(-1.0, 1.0);
    REQUIRE(expansive.waves.size() == 1);
    CHECK(expansive.waves[0].speed == 0.0);
    CHECK(max_residual(shock, burgers_equations()) <= 1e-12);
}

TEST_CASE("k2 round trip and residuals") {
    const double k = 2.0;
    std::mt19937_64 rng(1);
    CHECK(k2_riemann({1, 0, 0}, {1, 0, 0}, k).empty());
    for (int trial = 0; trial < 100; ++trial) {
        const K2Case c = k2_case(rng, k);
        const auto fan = k2_riemann(c.left, c.right, k);
        fan.validate();
        REQUIRE(fan.waves.size() == 3);
        CHECK((fan.waves[0].right - c.mid_left.vector()).lpNorm<Eigen::Infinity>() <= 1e-8);
        CHECK((fan.waves[2].left - c.mid_right.vector()).lpNorm<Eigen::Infinity>() <= 1e-8);
        for (int w : {0, 2}) {
            const auto a = jump::ShockAnsatz::shared(fan.waves[w].left, fan.waves[w].right, fan.waves[w].speed);
            CHECK(jump::k2_jump_residuals(a, k).lpNorm<Eigen::Infinity>() <= 1e-9);
        }
        CHECK(max_residual(fan, k2_equations(k)) <= 1e-9);
    }
}

TEST_CASE("k2 small jumps approach the characteristic speeds") {
    const double k = 2.0;
    const K2State base{1.0, 0.1, 0.0};
    std::vector<double> errors;
    for (double amp : {0.04, 0.02, 0.01, 0.005}) {
        const auto fan = k2_riemann(base, {base.v * (1 + amp), base.u + amp, base.sigma - amp}, k);
        const auto& lw = fan.waves.front();
        // mean of the characteristic speeds on either side of the wave
        const double target = 0.5 * ((lw.left(1) - k * std::sqrt(lw.left(0))) + (lw.right(1) - k * std::sqrt(lw.right(0))));
        errors.push_back(std::abs(lw.speed - target));
        CHECK(std::abs(lw.speed - (base.u - k * std::sqrt(base.v))) <= 10 * amp);
    }
    for (std::size_t j = 1; j < errors.size(); ++j) CHECK(std::log2(errors[j - 1] / errors[j]) >= 1.8);
}

TEST_CASE("pressureless fans") {
    const auto sym = pressureless_riemann({1.0, 1.0, 1.0}, {1.0, -1.0, 1.0});
    REQUIRE(sym.delta);
    CHECK(sym.delta->speed == 0.0);
    CHECK(sym.delta->rates(0) == 2.0);

    const auto mid = pressureless_riemann({2.0, 1.5, 1.0}, {2.0, -0.5, 2.0});
    REQUIRE(mid.delta);
    CHECK(mid.delta->speed == doctest::Approx(0.5));

    // delta speed and rates satisfy the space-time balance
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const EulerState l{0.2 + uni(rng), 0.5 + uni(rng), 1.0 + uni(rng)};
        const EulerState r{0.2 + uni(rng), -uni(rng), 1.0 + uni(rng)};
        const auto fan = pressureless_riemann(l, r);
        REQUIRE(fan.delta);
        CHECK(l.u >= fan.delta->speed);
        CHECK(fan.delta->speed >= r.u);
        CHECK(fan.delta->rates(0) > 0.0);
        // momentum rate equals the speed times the mass rate
        CHECK(std::abs(fan.delta->rates(1) - fan.delta->speed * fan.delta->rates(0)) <= 1e-12);
        const jump::DeltaShock d{fan.left, fan.right, fan.delta->speed, fan.delta->rates};
        CHECK(jump::delta_shock_balance(d).lpNorm<Eigen::Infinity>() <= 1e-11);
    }

    // vacuum fan: content over [-L, L] at time T equals data plus inflow, by direct integration
    const EulerState l{1.5, -0.4, 1.0}, r{0.7, 0.9, 2.0};
    const auto fan = pressureless_riemann(l, r);
    REQUIRE(fan.waves.size() == 2);
    CHECK(fan.waves[0].right.isZero());
    const double L = 3.0, T = 1.0;
    Eigen::Vector3d content = fan.left * (L + l.u * T) + fan.right * (L - r.u * T);
    Eigen::Vector3d expected = (fan.left + fan.right) * L + T * (fan.left * l.u - fan.right * r.u);
    CHECK((content - expected).lpNorm<Eigen::Infinity>() <= 1e-14);
    CHECK(pressureless_riemann(l, EulerState::vacuum()).waves.size() == 1);
}

TEST_CASE("pressure step fans") {
    const double gamma = 1.4;
    CHECK(pressure_step_riemann(1.0, {0.2, 3.0}, {0.2, 3.0}, gamma).empty());

    const auto sym = pressure_step_riemann(1.0, {0.7, 3.0}, {-0.7, 3.0}, gamma);
    REQUIRE(sym.waves.size() == 2);
    CHECK(sym.waves[0].right(1) == 0.0);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double rl = 0.5 + uni(rng), rr = trial % 2 ? rl : 0.5 + uni(rng);
        const double ps = 0.5 + uni(rng), us = uni(rng) - 0.5;
        const double pl = ps * (0.4 + 1.2 * uni(rng)), pr = ps * (0.4 + 1.2 * uni(rng));
        // velocity from the two jump conditions across each acoustic wave
        const double ul = us + (ps - pl) / std::sqrt(0.5 * rl * (gamma - 1) * (pl + ps));
        const double ur = us - (ps - pr) / std::sqrt(0.5 * rr * (gamma - 1) * (pr + ps));
        auto energy = [&](double rho, double u, double p) { return p / ((gamma - 1) * rho) + 0.5 * u * u; };
        const auto fan = pressure_step_riemann(rl, {ul, energy(rl, ul, pl)}, rr, {ur, energy(rr, ur, pr)}, gamma);
        fan.validate();
        const auto& left_wave = fan.waves.front();
        CHECK(left_wave.speed < 0.0);
        CHECK(fan.waves.back().speed > 0.0);
        const double u_mid = left_wave.right(1) / left_wave.right(0);
        const double p_mid = gamma_law(left_wave.right(0), left_wave.right(2) / left_wave.right(0), u_mid, gamma);
        CHECK(std::abs(u_mid - us) <= 1e-8);
        CHECK(std::abs(p_mid - ps) <= 1e-8);
        for (const auto& w : fan.waves) {
            auto pu = [&](const Eigen::VectorXd& q) {
                const double u = q(1) / q(0);
                return Eigen::Vector2d(gamma_law(q(0), q(2) / q(0), u, gamma), gamma_law(q(0), q(2) / q(0), u, gamma) * u);
            };
            const Eigen::Vector2d jl = pu(w.left), jr = pu(w.right);
            CHECK(std::abs(-w.speed * (w.right(1) - w.left(1)) + jr(0) - jl(0)) <= 1e-12);
            CHECK(std::abs(-w.speed * (w.right(2) - w.left(2)) + jr(1) - jl(1)) <= 1e-12);
        }
        CHECK(max_residual(fan, pressure_step_equations(gamma)) <= 1e-9);
    }
}

TEST_CASE("elasto transport") {
    CHECK(elasto_transport_riemann({1, 0, 0, 1}, {1, 0, 0, 1}).empty());
    const auto fan = elasto_transport_riemann({1.0, 2.0, 0.1, 1.0}, {0.8, 0.0, -0.2, 2.0});
    REQUIRE(fan.waves.size() == 1);
    CHECK(fan.waves[0].speed == 1.0);
    CHECK(elasto_transport_riemann({1, -1, 0, 1}, {1, 1, 0, 1}).waves[0].speed == 0.0);
    CHECK(max_residual(fan, elasto_transport_equations()) <= 1e-12);
}

TEST_CASE("elasto force regimes") {
    const ElastoParams params{3.0, 2.0, 0.5};
    const auto eqs = elasto_force_equations(params);
    CHECK(elasto_force_riemann({1, 0, 0, 1}, {1, 0, 0, 1}, params).empty());

    auto impact = [&](double u) { return elasto_force_riemann({1, u, 0, 1}, {1, -u, 0, 1}, params); };
    auto count = [](const RiemannFan& fan, WaveKind kind) {
        return std::count_if(fan.waves.begin(), fan.waves.end(), [&](const Wave& w) { return w.kind == kind; });
    };
    const auto weak = impact(0.05);
    CHECK(count(weak, WaveKind::Elastic) == 2);
    const auto moderate = impact(0.5);
    CHECK(count(moderate, WaveKind::Elastic) == 2);
    CHECK(count(moderate, WaveKind::Plastic) == 2);
    CHECK(std::abs(moderate.waves.front().speed) > std::abs(moderate.waves[1].speed));
    const auto strong = impact(2.0);
    CHECK(count(strong, WaveKind::ElastoPlastic) == 2);
    for (const auto* fan : {&weak, &moderate, &strong}) {
        fan->validate();
        CHECK(max_residual(*fan, eqs) <= 1e-9);
        // symmetric impact comes to rest
        CHECK(std::abs(fan->sample(0.0)(1)) <= 1e-12);
    }
}

TEST_CASE("elasto force random data") {
    const ElastoParams params{3.0, 2.0, 0.5};
    const auto eqs = elasto_force_equations(params);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const ElastoState l{0.7 + 0.6 * uni(rng), 2.0 * uni(rng) - 1.0, uni(rng) - 0.5, 0.5 + uni(rng)};
        const ElastoState r{0.7 + 0.6 * uni(rng), 2.0 * uni(rng) - 1.0, uni(rng) - 0.5, 0.5 + uni(rng)};
        const auto fan = elasto_force_riemann(l, r, params);
        fan.validate();
        for (const auto& w : fan.waves) {
            CHECK(std::abs(w.left(2)) <= params.s0 * (1 + 1e-12));
            CHECK(std::abs(w.right(2)) <= params.s0 * (1 + 1e-12));
        }
        CHECK(max_residual(fan, eqs) <= 1e-9);
    }
}

TEST_CASE("merged fronts continue the precursor-plastic pair") {
    const ElastoParams params{3.0, 2.0, 0.5};
    auto middle_sigma = [&](double u) {
        const auto fan = elasto_force_riemann({1, u, 0, 1}, {1, -u, 0, 1}, params);
        const Eigen::VectorXd w = fan.sample(0.0);
        return w(2) - w(3);
    };
    double previous = middle_sigma(0.5);
    double worst_step = 0.0;
    for (int n = 1; n <= 300; ++n) {
        const double now = middle_sigma(0.5 + 0.005 * n);
        worst_step = std::max(worst_step, std::abs(now - previous));
        previous = now;
    }
    CHECK(worst_step <= 0.05);

    // one side switches between the two regimes near the middle velocity
    const auto fan = elasto_force_riemann({0.9571227611542521, 1.1921214479496203, 0.2639357730852997, 0.92475317883144625},
                                          {1.2019145121803572, -1.5521465917740962, -0.15822199371842194, 0.81660474846751285},
                                          params);
    fan.validate();
    CHECK(max_residual(fan, elasto_force_equations(params)) <= 1e-9);
}

TEST_CASE("purely plastic data keep s constant") {
    const ElastoParams params{3.0, 2.0, 0.5};
    const auto fan = elasto_force_riemann({1.0, 0.3, -0.5, 1.0}, {0.9, -0.2, -0.5, 1.3}, params);
    for (const auto& w : fan.waves) {
        CHECK(w.left(2) == -0.5);
        CHECK(w.right(2) == -0.5);
    }
    CHECK(max_residual(fan, elasto_force_equations(params)) <= 1e-9);
}

TEST_CASE("elastic small jumps approach the acoustic speed") {
    const ElastoParams params{3.0, 2.0, 10.0};
    const ElastoState base{1.0, 0.0, 0.0, 1.0};
    const double acoustic = std::sqrt(base.v * (params.gamma * base.p + params.k * params.k));
    std::vector<double> errors;
    for (double amp : {0.04, 0.02, 0.01, 0.005}) {
        const auto fan = elasto_force_riemann(base, {base.v, base.u - amp, base.s, base.p}, params);
        const auto& w = fan.waves.back();
        auto speed_of = [&](const Eigen::VectorXd& s) { return std::sqrt(s(0) * (params.gamma * s(3) + params.k * params.k)); };
        errors.push_back(std::abs(w.speed - 0.5 * (speed_of(w.left) + speed_of(w.right))));
        CHECK(std::abs(w.speed - acoustic) <= 20 * amp);
    }
    for (std::size_t j = 1; j < errors.size(); ++j) CHECK(std::log2(errors[j - 1] / errors[j]) >= 1.8);
}
