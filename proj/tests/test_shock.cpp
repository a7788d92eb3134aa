#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chainsim/errors.hpp"
#include "chainsim/shock.hpp"
#include "oracles.hpp"

using namespace chainsim;

namespace {

MacroState grid_of(std::initializer_list<double> rhos, double x_left = 0.0, double dx = 1.0,
                   double t = 0.0) {
    MacroState s;
    s.t = t;
    s.x_left = x_left;
    s.dx = dx;
    s.rho.resize(static_cast<Eigen::Index>(rhos.size()));
    Eigen::Index i = 0;
    for (double v : rhos) s.rho[i++] = v;
    return s;
}

}  // namespace

TEST_CASE("rankine-hugoniot speed") {
    CHECK(rh_speed(-0.5, 0.5, 0.0) == doctest::Approx(1.0));
    CHECK(rh_speed(0.0, 0.7, 0.3) == doctest::Approx(0.3));
    CHECK_THROWS_AS(rh_speed(-0.5, 1.0, 0.0), NumericalError);
    CHECK_THROWS_AS(rh_speed(-0.5, 1.0 - 1e-10, 0.0), NumericalError);

    std::mt19937 rng(4);
    std::uniform_real_distribution<double> flux(-2.0, 0.0), dens(0.0, 0.99), vel(-3.0, 3.0);
    for (int k = 0; k < 1000; ++k) {
        const double lf = flux(rng), rd = dens(rng), v = vel(rng);
        // nonpositive left flux moves the jump toward the lower density
        CHECK(rh_speed(lf, rd, 0.0) >= 0.0);
        // exactly linear in the velocity, homogeneous of degree 1 in the flux
        CHECK(rh_speed(lf, rd, v) == doctest::Approx(rh_speed(lf, rd, 0.0) + v));
        CHECK(rh_speed(3.0 * lf, rd, 0.0) == doctest::Approx(3.0 * rh_speed(lf, rd, 0.0)));
    }
}

TEST_CASE("power-family jump speed") {
    CHECK(pme_jump_speed(1.0, 1.5, -0.2) == doctest::Approx(-0.4));
    CHECK(pme_jump_speed(2.0, 2.0, 0.3) == doctest::Approx(0.6));
    CHECK_THROWS_AS(pme_jump_speed(2.0, 1.0, 0.3), std::domain_error);
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> ms(0.5, 4.0), rs(1.001, 5.0);
    for (int k = 0; k < 200; ++k)
        CHECK(pme_jump_speed(ms(rng), rs(rng), 0.0) == 0.0);  // waiting-time onset
}

TEST_CASE("a zero-flux jump stays put") {
    std::vector<MacroState> snaps;
    for (int k = 0; k < 4; ++k)
        snaps.push_back(grid_of({1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 0.5, 0.5}, 0.0, 0.25, 0.1 * k));
    const auto r = track_shock(snaps, ForceLaw::f1(), VelocityField::zero());
    REQUIRE(r.status == TrackStatus::Completed);
    REQUIRE(r.path.positions.size() == 4);
    for (double x : r.path.positions) CHECK(x == doctest::Approx(1.0));
    for (double lf : r.path.left_flux) CHECK(lf == 0.0);
    for (double rd : r.path.right_density) CHECK(rd == doctest::Approx(0.5));
}

TEST_CASE("tracking failure modes") {
    // no jump anywhere
    std::vector<MacroState> flat;
    for (int k = 0; k < 3; ++k)
        flat.push_back(grid_of({0.5, 0.5, 0.5, 0.5, 0.5, 0.5}, 0.0, 0.5, 0.1 * k));
    CHECK_THROWS_AS(track_shock(flat, ForceLaw::f1(), VelocityField::zero()), NumericalError);

    // right state at the threshold: the jump dissolves and tracking stops
    std::vector<MacroState> deg;
    for (int k = 0; k < 3; ++k)
        deg.push_back(grid_of({1.8, 1.8, 1.8, 1.0, 1.0, 1.0}, 0.0, 0.5, 0.1 * k));
    const auto r = track_shock(deg, ForceLaw::f1(), VelocityField::zero());
    CHECK(r.status == TrackStatus::JumpDissolved);
    CHECK(r.path.positions.empty());
    CHECK(r.stop_time == doctest::Approx(0.0));
}

TEST_CASE("pure transport moves the tracked jump with v") {
    // flat density levels: no flux, speed = v at the interface
    std::vector<MacroState> snaps;
    const double dt = 0.05;
    for (int k = 0; k < 5; ++k) {
        auto s = grid_of({1.0, 1.0, 1.0, 1.0, 0.4, 0.4, 0.4, 0.4}, 0.0, 0.25, dt * k);
        snaps.push_back(s);
    }
    const auto r = track_shock(snaps, ForceLaw::f1(), VelocityField::constant(0.3));
    REQUIRE(r.status == TrackStatus::Completed);
    for (std::size_t k = 0; k < r.path.times.size(); ++k)
        CHECK(r.path.positions[k] == doctest::Approx(1.0 + 0.3 * r.path.times[k]));
}

TEST_CASE("equilibrium interval on the analytic cases") {
    // rho = 2 on [-0.5, 0.5] -> (-1, 1)
    const auto two = [](double x) { return (x > -0.5 && x < 0.5) ? 2.0 : 0.0; };
    const MacroState g1 = discretize(two, -2.0, 1e-3, 4000);
    const auto e1 = equilibrium_interval(g1, -2.0, 2.0);
    CHECK(e1.a == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(e1.b == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(e1.residual_mass) <= 1e-8);
    CHECK(std::abs(e1.residual_com) <= 1e-8);

    // rho = 3 on [0, 1] -> (-1, 2)
    const auto three = [](double x) { return (x > 0.0 && x < 1.0) ? 3.0 : 0.0; };
    const MacroState g2 = discretize(three, -2.0, 1e-3, 5000);
    const auto e2 = equilibrium_interval(g2, -2.0, 3.0);
    CHECK(e2.a == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(e2.b == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(std::abs(e2.residual_mass) <= 1e-8);
    CHECK(std::abs(e2.residual_com) <= 1e-8);

    // independent residual evaluation on the returned interval
    double mass_ab = 0.0, mom_ab = 0.0;
    for (int i = 0; i < g2.cells(); ++i) {
        const double xc = g2.cell_center(i);
        if (xc >= e2.a && xc <= e2.b) {
            mass_ab += g2.rho[i] * g2.dx;
            mom_ab += xc * g2.rho[i] * g2.dx;
        }
    }
    CHECK((e2.b - e2.a) - mass_ab == doctest::Approx(0.0).epsilon(1e-4));
    CHECK(0.5 * (e2.b * e2.b - e2.a * e2.a) - mom_ab == doctest::Approx(0.0).epsilon(1e-4));
}

TEST_CASE("equilibrium interval with a smooth asymmetric hump") {
    const auto init = bump_density(3.0, 0.3, 0.2, 0.0);
    const MacroState g = discretize(init, -1.5, 1e-3, 3400);
    const auto e = equilibrium_interval(g, -1.5, 1.9);
    CHECK(e.a < e.b);
    CHECK(std::abs(e.residual_mass) <= 1e-8);
    CHECK(std::abs(e.residual_com) <= 1e-8);
    // the hump exceeds 1 only near its center, so the plateau sits inside it
    CHECK(e.a > -0.1);
    CHECK(e.b < 0.5);
}

TEST_CASE("equilibrium solver rejects bad brackets") {
    const auto two = [](double x) { return (x > -0.5 && x < 0.5) ? 2.0 : 0.0; };
    const MacroState g = discretize(two, -2.0, 1e-2, 400);
    // bracket end inside the plateau
    CHECK_THROWS_AS(equilibrium_interval(g, 0.0, 2.0), std::domain_error);
    // nothing above the threshold inside the bracket
    CHECK_THROWS_AS(equilibrium_interval(g, 1.0, 2.0), std::domain_error);
    // solution escapes a bracket that is too tight
    CHECK_THROWS_AS(equilibrium_interval(g, -0.9, 0.9), NumericalError);
}

TEST_CASE("plateau intervals and support edges") {
    const MacroState s = grid_of({0.2, 1.5, 1.5, 0.3, 0.4, 2.0, 0.1}, 0.0, 1.0);
    const auto ivals = plateau_intervals(s, 1.0);
    REQUIRE(ivals.size() == 2);
    CHECK(ivals[0].first == doctest::Approx(1.0));
    CHECK(ivals[0].second == doctest::Approx(3.0));
    CHECK(ivals[1].first == doctest::Approx(5.0));
    CHECK(ivals[1].second == doctest::Approx(6.0));

    const auto [lo, hi] = support_edges(s, 1.0);
    CHECK(lo > 0.5);
    CHECK(lo < 1.5);
    CHECK(hi > 5.0);
    CHECK(hi < 6.5);
    CHECK_THROWS_AS(support_edges(s, 5.0), std::runtime_error);
}

TEST_CASE("self-similar source solution satisfies its equation") {
    const oracles::Barenblatt bb{2.0, 0.3};
    // finite-difference residual of u_t = (u^2)_xx inside the support
    const double t = 0.2, h = 1e-4, ht = 1e-6;
    for (double x : {-0.3, -0.1, 0.0, 0.15, 0.35}) {
        const double ut = (bb(x, t + ht) - bb(x, t - ht)) / (2.0 * ht);
        const double uxx = (bb(x + h, t) * bb(x + h, t) - 2.0 * bb(x, t) * bb(x, t) +
                            bb(x - h, t) * bb(x - h, t)) /
                           (h * h);
        CHECK(ut == doctest::Approx(uxx).epsilon(1e-4));
    }
    // mass is conserved across one decade
    CHECK(bb.total_mass(0.05) == doctest::Approx(bb.total_mass(0.5)).epsilon(1e-6));
}

TEST_CASE("spreading front follows the self-similar power law") {
    // rho = 1 + barenblatt solves the density equation for the square
    // power-family flux (rho - 1)^2; the support edge must follow t^(1/3)
    const oracles::Barenblatt bb{2.0, 0.3};
    const double t0 = 0.05, t1 = 0.5;  // one decade
    const ForceLaw law = ForceLaw::power(2.0);

    const auto init = [&](double x) { return 1.0 + bb(x, t0); };
    const MacroState s0 = discretize(init, -2.0, 8e-3, 500, t0);
    const auto traj =
        simulate_macro(s0, t1 - t0, 0.1, law, VelocityField::zero(), {}, 14000);

    for (const auto& s : traj.states) {
        const auto [lo, hi] = support_edges(s, 1.0 + 1e-4);
        const double expect = bb.front(s.t);
        CHECK(hi == doctest::Approx(expect).epsilon(0.05));
        CHECK(lo == doctest::Approx(-expect).epsilon(0.05));
    }
}
