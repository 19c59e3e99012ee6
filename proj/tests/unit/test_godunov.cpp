#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gfshock/errors.hpp"
#include "gfshock/godunov.hpp"
#include "gfshock/systems.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace gfshock;
using namespace gfshock::godunov;
using Eigen::VectorXd;

namespace {

Grid1D burgers_grid(const VectorXd& u, double h) {
    Grid1D g = Grid1D::uniform(u.size(), 1, h);
    g.states.row(0) = u.transpose();
    return g;
}

// (rho, rho u, rho e) of Sod-type data on n cells of [0, 1]
Grid1D sod_grid(Eigen::Index n, double gamma) {
    Grid1D g = Grid1D::uniform(n, 3, 1.0 / double(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const bool left = g.center(i) < 0.5;
        g.states.col(i) = systems::EulerState::from_pressure(left ? 1.0 : 0.125, 0.0, left ? 1.0 : 0.1, gamma).conservative();
    }
    return g;
}

}  // namespace

TEST_CASE("cfl step") {
    const systems::BurgersSolver burgers;
    const Grid1D g = burgers_grid(Eigen::Vector3d(4.0, 0.0, 0.0), 0.1);
    CHECK(cfl_dt(g, burgers, 0.25) == doctest::Approx(0.0125));
    const Grid1D wide = burgers_grid(Eigen::Vector3d(4.0, 0.0, 0.0), 0.2);
    CHECK(cfl_dt(wide, burgers, 0.25) == doctest::Approx(2 * cfl_dt(g, burgers, 0.25)));
    CHECK(cfl_dt(burgers_grid(VectorXd::Constant(5, 1.0), 0.1), burgers, 0.4, 0.03) == 0.03);
    CHECK_THROWS_AS(cfl_dt(g, burgers, 0.6), InvalidArgument);
    CHECK_THROWS_AS(godunov_step(g, burgers, 0.1), CflViolation);
}

TEST_CASE("godunov step examples") {
    const systems::BurgersSolver burgers;
    const Grid1D g = burgers_grid(Eigen::Vector3d(2.0, 0.0, 0.0), 1.0);
    const Grid1D next = godunov_step(g, burgers, 0.25);
    CHECK(next.states(0, 1) == 0.5);
    const Grid1D flat = burgers_grid(VectorXd::Constant(6, 0.7), 0.1);
    CHECK(godunov_step(flat, burgers, 0.05).states == flat.states);
}

TEST_CASE("burgers matches the four-case formulas bit for bit") {
    const systems::BurgersSolver burgers;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        VectorXd u(64);
        for (auto& x : u) x = uni(rng);
        u(5) = u(6);  // an interface without a jump
        const double h = 0.1;
        const Grid1D g = burgers_grid(u, h);
        const double dt = cfl_dt(g, burgers, 0.45);
        const VectorXd engine = godunov_step(g, burgers, dt).states.row(0).transpose();
        const VectorXd reference = burgers_reference_step(u, dt / h);
        CHECK((engine.array() == reference.array()).all());
    }
}

TEST_CASE("burgers conservation and a travelling shock") {
    const systems::BurgersSolver burgers;
    const Eigen::Index n = 200;
    const double h = 0.01;
    VectorXd u(n);
    for (Eigen::Index i = 0; i < n; ++i) u(i) = i < 50 ? 1.0 : 0.0;
    Grid1D g = burgers_grid(u, h);
    const double dt = 0.4 * h;
    for (int step = 0; step < 100; ++step) {
        const double before = g.total()(0);
        g = godunov_step(g, burgers, dt);
        // boundary flux: F(u_first) - F(u_last) = 1/2
        CHECK(std::abs(g.total()(0) - before - 0.5 * dt) <= 1e-13);
    }
    // mass-weighted position x0 + c t
    const double mass = g.states.sum() * h - 0.5 * g.time;
    CHECK(std::abs(mass - 0.5) <= 1e-12);
    for (Eigen::Index i = 1; i < n; ++i) CHECK(g.states(0, i) <= g.states(0, i - 1) + 1e-15);
}

TEST_CASE("split step with the identity is the plain step") {
    const systems::BurgersSolver burgers;
    const systems::IdentitySolver identity({"u"});
    const Grid1D g = burgers_grid(Eigen::Vector4d(1.0, 0.2, -0.5, 0.3), 0.1);
    CHECK(split_step(g, burgers, identity, 0.02).states == godunov_step(g, burgers, 0.02).states);
}

TEST_CASE("split euler conserves up to boundary fluxes") {
    const double gamma = 1.4;
    const systems::PressurelessSolver transport;
    const systems::PressureStepSolver force(gamma);
    Grid1D g = sod_grid(100, gamma);
    for (int step = 0; step < 40; ++step) {
        const double dt = std::min(cfl_dt(g, transport, 0.4), cfl_dt(g, force, 0.4));
        const VectorXd before = g.total();
        Grid1D half = godunov_step(g, transport, dt);
        // the first substep carries no flux through the walls at rest
        CHECK(((half.total() - before).cwiseAbs().array() <= 1e-12 * before.cwiseAbs().array().max(1.0)).all());
        const VectorXd mid = half.total();
        const VectorXd q0 = half.folded_states().col(0), qn = half.folded_states().col(99);
        auto pflux = [&](const VectorXd& q) {
            const double p = systems::gamma_law(q(0), q(2) / q(0), q(1) / q(0), gamma);
            return Eigen::Vector3d(0.0, p, p * q(1) / q(0));
        };
        g = godunov_step(half, force, dt);
        const VectorXd expected = mid + dt * (pflux(q0) - pflux(qn));
        CHECK(((g.total() - expected).cwiseAbs().array() <= 1e-12 * expected.cwiseAbs().array().max(1.0)).all());
    }
}

TEST_CASE("pressureless ledger conserves mass and momentum") {
    const systems::PressurelessSolver solver;
    Grid1D g = Grid1D::uniform(40, 3, 0.05);
    for (Eigen::Index i = 0; i < 40; ++i) {
        const double u = i < 20 ? 1.0 : -0.6;
        g.states.col(i) = systems::EulerState{1.0, u, 1.0}.conservative();
    }
    const VectorXd start = g.total();
    for (int step = 0; step < 20; ++step) {
        const double dt = cfl_dt(g, solver, 0.4, 0.01);
        const VectorXd before = g.total();
        const VectorXd q0 = g.folded_states().col(0), qn = g.folded_states().col(39);
        auto flux = [](const VectorXd& q) { return VectorXd(q * (q(1) / q(0))); };
        g = godunov_step(g, solver, dt);
        const VectorXd expected = before + dt * (flux(q0) - flux(qn));
        CHECK((g.total() - expected).lpNorm<Eigen::Infinity>() <= 1e-13 * start.lpNorm<Eigen::Infinity>());
    }
    CHECK(g.point_masses.row(0).sum() > 0.0);
    CHECK((g.point_masses.row(0).array() >= 0.0).all());
}

TEST_CASE("reflective wall mirrors the data") {
    const systems::BurgersSolver burgers;
    VectorXd u(10);
    for (Eigen::Index i = 0; i < 10; ++i) u(i) = std::sin(0.7 * double(i)) + 0.2;
    Grid1D a = burgers_grid(u, 0.1);
    Grid1D b = burgers_grid(-u.reverse(), 0.1);
    for (int i = 0; i < 10; ++i) {
        a = godunov_step(a, burgers, 0.02, Boundary::Reflective);
        b = godunov_step(b, burgers, 0.02, Boundary::Reflective);
    }
    CHECK((a.states.row(0).transpose() + b.states.row(0).transpose().reverse()).lpNorm<Eigen::Infinity>() <= 1e-14);
    // a wall passes no mass
    Grid1D w = burgers_grid(VectorXd::Constant(10, -0.5), 0.1);
    for (int i = 0; i < 10; ++i) w = godunov_step(w, burgers, 0.02, Boundary::Reflective);
    CHECK(std::abs(w.total()(0) + 0.5) <= 1e-14);
}

TEST_CASE("elasto pair keeps constant data") {
    const systems::ElastoTransportSolver transport;
    const systems::ElastoForceSolver force({3.0, 2.0, 0.5});
    Grid1D g = Grid1D::uniform(8, 4, 0.1);
    for (Eigen::Index i = 0; i < 8; ++i) g.states.col(i) = Eigen::Vector4d(1.0, 0.3, 0.1, 1.0);
    CHECK(split_step(g, transport, force, 0.01).states == g.states);
}

TEST_CASE("run lands on output times") {
    Scenario s;
    s.system = "burgers";
    s.solvers = {std::make_shared<systems::BurgersSolver>()};
    VectorXd u(100);
    for (Eigen::Index i = 0; i < 100; ++i) u(i) = i < 30 ? 1.0 : 0.0;
    s.initial = burgers_grid(u, 0.01);
    s.end_time = 0.0;
    CHECK(run(s).snapshots.size() == 1);

    s.end_time = 0.3;
    s.output_times = {0.1, 0.2};
    const auto result = run(s);
    REQUIRE(result.snapshots.size() == 3);
    CHECK(result.snapshots[0].time == 0.1);
    CHECK(result.snapshots[2].time == 0.3);
    const VectorXd last = result.snapshots.back().grid.states.row(0).transpose();
    int band = 0;
    for (Eigen::Index i = 1; i < last.size(); ++i) CHECK(last(i) <= last(i - 1) + 1e-15);
    for (double x : last) band += (x > 0.01 && x < 0.99);
    CHECK(band <= 4);

    std::ostringstream csv;
    write_csv(csv, s.initial, {"u"});
    CHECK(csv.str().rfind("x,u,ledger_u\n", 0) == 0);
}

TEST_CASE("dimensional splitting advects a block") {
    const systems::LinearAdvectionSolver ax(1.0, {"q"}), ay(-0.5, {"q"});
    Grid2D g = Grid2D::uniform(20, 20, 1, 0.1, 0.1);
    g.states.setZero();
    for (Eigen::Index j = 5; j < 10; ++j)
        for (Eigen::Index i = 5; i < 10; ++i) g.states(0, g.index(i, j)) = 1.0;
    const double mass = g.states.sum();
    for (int k = 0; k < 5; ++k) g = dimensional_split_step(g, ax, ay, 0.04);
    CHECK(std::abs(g.states.sum() - mass) <= 1e-12);
    CHECK(g.states.maxCoeff() <= 1.0 + 1e-15);
    CHECK(g.states.minCoeff() >= -1e-15);

    const systems::PressurelessSolver delta;
    Grid2D e = Grid2D::uniform(4, 4, 3, 0.1, 0.1);
    CHECK_THROWS_AS(dimensional_split_step(e, delta, delta, 0.01), InvalidArgument);
}
