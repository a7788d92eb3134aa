#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chainsim/errors.hpp"
#include "chainsim/macro.hpp"
#include "chainsim/shock.hpp"

using namespace chainsim;

namespace {

MacroState grid_of(std::initializer_list<double> rhos, double x_left = 0.0, double dx = 1.0) {
    MacroState s;
    s.x_left = x_left;
    s.dx = dx;
    s.rho.resize(static_cast<Eigen::Index>(rhos.size()));
    Eigen::Index i = 0;
    for (double v : rhos) s.rho[i++] = v;
    return s;
}

}  // namespace

TEST_CASE("sub-threshold and constant states are fixed points") {
    const MacroState s = grid_of({0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8});
    const MacroState out = step_macro(s, 0.1, ForceLaw::f1(), VelocityField::zero());
    for (int i = 0; i < s.cells(); ++i) CHECK(out.rho[i] == s.rho[i]);  // bitwise

    // constant above threshold: zero discrete Laplacian in the interior
    const MacroState c = grid_of({2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0});
    const MacroState cout = step_macro(c, 0.1, ForceLaw::f1(), VelocityField::zero());
    for (int i = 0; i < c.cells(); ++i) CHECK(cout.rho[i] == doctest::Approx(2.0));
}

TEST_CASE("single-cell bump follows the hand-evaluated update") {
    // dt/dx^2 = 0.1; center 2 -> 2 + 0.1 (f(1) - 2 f(0.5) + f(1)) = 1.9,
    // neighbors 1 -> 1 + 0.1 (f(0.5) - 2 f(1) + f(1)) = 1.05
    const MacroState s = grid_of({1.0, 1.0, 1.0, 2.0, 1.0, 1.0, 1.0});
    const MacroState out = step_macro(s, 0.1, ForceLaw::f1(), VelocityField::zero());
    CHECK(out.rho[3] == doctest::Approx(1.9));
    CHECK(out.rho[2] == doctest::Approx(1.05));
    CHECK(out.rho[4] == doctest::Approx(1.05));
    CHECK(out.rho[1] == doctest::Approx(1.0));
    CHECK(mass(out) == doctest::Approx(mass(s)).epsilon(1e-14));
}

TEST_CASE("degenerate neighborhoods are bitwise unchanged") {
    const MacroState s = grid_of({0.0, 0.3, 1.0, 0.7, 0.2, 0.9, 1.0, 0.5, 0.0});
    const MacroState out = step_macro(s, 0.05, ForceLaw::f2(), VelocityField::zero());
    for (int i = 0; i < s.cells(); ++i) CHECK(out.rho[i] == s.rho[i]);
}

TEST_CASE("drift is upwinded, conservative, and sign-flippable") {
    const MacroState s = grid_of({0.0, 0.0, 0.0, 1.5, 2.0, 0.5, 0.0, 0.0, 0.0, 0.0}, 0.0, 0.5);
    const auto v = VelocityField::constant(1.0);
    const double dt = 0.01;
    const MacroState out = step_macro(s, dt, ForceLaw::f1(), v, {}, false);
    CHECK(mass(out) == doctest::Approx(mass(s)).epsilon(1e-14));
    // center of mass is transported to the right along +v
    CHECK(center_of_mass(out) > center_of_mass(s));

    const MacroState leg = step_macro(s, dt, ForceLaw::f1(), v, {}, true);
    CHECK(center_of_mass(leg) < center_of_mass(s));
    // with constant v > 0 the legacy drift is exactly the one-sided form
    // rho_i + (dt/dx)(rho_{i+1} v - rho_i v) on top of the diffusion update
    const MacroState dif = step_macro(s, dt, ForceLaw::f1(), VelocityField::zero());
    for (int i = 1; i < s.cells() - 1; ++i) {
        const double expect = dif.rho[i] + dt / s.dx * (s.rho[i + 1] - s.rho[i]);
        CHECK(leg.rho[i] == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("bump initializer") {
    const auto f = bump_density(3.0, 0.3, 0.0, 0.5);
    CHECK(f(0.0) == doctest::Approx(0.5 + 3.0 * std::exp(-1.0)));
    CHECK(f(0.3) == doctest::Approx(0.5));
    CHECK(f(-0.3) == doctest::Approx(0.5));
    CHECK(f(5.0) == doctest::Approx(0.5));
    CHECK(f(0.15) == doctest::Approx(0.5 + 3.0 * std::exp(0.09 / (0.15 * 0.15 - 0.09))));
    CHECK_THROWS_AS(bump_density(1.0, -0.5, 0.0, 0.0), std::domain_error);
}

TEST_CASE("waiting-time initializer") {
    const auto f = waiting_time_density();
    CHECK(f(0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f(-0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f(0.0) == doctest::Approx(13.0 / 8.0));
    CHECK(f(0.5) == 1.0);
    for (double x : {0.05, 0.11, 0.17, 0.23}) CHECK(f(x) == f(-x));
    // the excess over 1 vanishes to fifth order at the edge, so the initial
    // edge flux gradient of any admissible law vanishes there
    CHECK(f(0.249) - 1.0 == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("integrals by the midpoint rule") {
    const MacroState s = grid_of({0.0, 2.0, 2.0, 2.0, 2.0, 2.0, 0.0}, -1.75, 0.5);
    // rho = 2 on [-1.25, 1.25]
    CHECK(mass(s) == doctest::Approx(5.0));
    CHECK(center_of_mass(s) == doctest::Approx(0.0));
    CHECK(l2_norm(s) == doctest::Approx(std::sqrt(4.0 * 2.5)));

    const MacroState o = grid_of({0.0, 3.0, 3.0, 0.0, 0.0}, -0.5, 0.5);
    // rho = 3 on [0, 1]
    CHECK(mass(o) == doctest::Approx(3.0));
    CHECK(center_of_mass(o) == doctest::Approx(0.5));

    const MacroState z = grid_of({0.0, 0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(center_of_mass(z), std::domain_error);
}

TEST_CASE("conservation and dissipation along a run") {
    const auto init = bump_density(3.0, 0.3, 0.0, 0.5);
    const MacroState s0 = discretize(init, -0.8, 4e-3, 400);
    const auto traj =
        simulate_macro(s0, 5e-3, 0.1, ForceLaw::f1(), VelocityField::zero(), {}, 20);
    REQUIRE(traj.states.size() > 5);

    const double m0 = mass(s0);
    const double c0 = center_of_mass(s0);
    double prev_l2 = l2_norm(s0);
    for (const auto& s : traj.states) {
        CHECK(mass(s) == doctest::Approx(m0).epsilon(1e-8));
        CHECK(std::abs(center_of_mass(s) - c0) <= 1e-6 * (s.t - s0.t + 1e-9));
        const double l2 = l2_norm(s);
        CHECK(l2 <= prev_l2 + 1e-10);
        prev_l2 = l2;
        CHECK(s.rho.minCoeff() >= 0.0);
    }
}

TEST_CASE("a smooth threshold crossing steepens into a jump") {
    // rho passes through 1 continuously; after a while the profile develops
    // a cell-to-cell jump well above the initial slope resolution
    const auto ramp = [](double x) { return std::clamp(1.0 - 0.5 * x, 0.2, 1.8); };
    const MacroState s0 = discretize(ramp, -3.0, 2e-3, 2500);
    const auto traj =
        simulate_macro(s0, 0.02, 0.1, ForceLaw::f1(), VelocityField::zero(), {}, 100000);
    const MacroState& end = traj.states.back();
    double max_jump = 0.0;
    for (int i = 0; i + 1 < end.cells(); ++i)
        max_jump = std::max(max_jump, std::abs(end.rho[i + 1] - end.rho[i]));
    const double initial_jump = 0.5 * 2e-3;
    CHECK(max_jump > 20.0 * initial_jump);
}

TEST_CASE("sub-threshold growth follows the exact logistic solution per cell") {
    // while rho < 1 everywhere the diffusion is fully degenerate and each
    // cell evolves by the plain logistic equation
    const GrowthParams growth{0.5, 1.5};
    const auto init = bump_density(0.8, 0.3, 0.0, 0.0);
    const MacroState s0 = discretize(init, -0.6, 5e-3, 240);
    const double T = 1.5;
    const auto traj =
        simulate_macro(s0, T, 0.1, ForceLaw::f1(), VelocityField::zero(), growth, 1000000);
    const MacroState& end = traj.states.back();
    REQUIRE(end.rho.maxCoeff() < 1.0);
    for (int i = 0; i < end.cells(); ++i) {
        const double r0 = s0.rho[i];
        const double expect =
            r0 == 0.0 ? 0.0
                      : growth.rho_star /
                            (1.0 + (growth.rho_star / r0 - 1.0) *
                                       std::exp(-growth.alpha * growth.rho_star * T));
        CHECK(end.rho[i] == doctest::Approx(expect).epsilon(1e-6));
    }
    // vacuum is a fixed point of the source
    CHECK(end.rho[0] == 0.0);
}

TEST_CASE("growth above the threshold feeds a spreading profile") {
    const GrowthParams growth{0.5, 1.5};
    const auto init = bump_density(3.0, 0.3, 0.0, 0.0);
    const MacroState s0 = discretize(init, -1.0, 5e-3, 400);
    const auto traj =
        simulate_macro(s0, 1.0, 0.1, ForceLaw::f1(), VelocityField::zero(), growth, 80000);
    double prev_mass = 0.0;
    for (const auto& s : traj.states) {
        CHECK(mass(s) > prev_mass);
        prev_mass = mass(s);
    }
    const MacroState& end = traj.states.back();
    // the produced mass is pulled toward the capacity but capped by spreading
    CHECK(end.rho.maxCoeff() > 1.0);
    CHECK(end.rho.maxCoeff() < growth.rho_star);
    const auto hull0 = plateau_intervals(s0, 0.5);
    const auto hull1 = plateau_intervals(end, 0.5);
    REQUIRE(hull0.size() == 1);
    REQUIRE(hull1.size() == 1);
    CHECK(hull1[0].second - hull1[0].first > hull0[0].second - hull0[0].first);
}

TEST_CASE("scheme failure modes are reported") {
    // gross CFL violation drives a cell negative
    const MacroState s = grid_of({0.0, 0.0, 0.2, 3.0, 0.2, 0.0, 0.0}, 0.0, 0.1);
    CHECK_THROWS_AS(step_macro(s, 0.1, ForceLaw::f1(), VelocityField::zero()), NumericalError);

    // support touching the grid edge aborts
    const MacroState tight = grid_of({1.0, 1.5, 2.0, 1.5, 1.0}, 0.0, 0.1);
    CHECK_THROWS_AS(step_macro(tight, 1e-4, ForceLaw::f1(), VelocityField::zero()),
                    NumericalError);

    CHECK_THROWS_AS(step_macro(s, -1.0, ForceLaw::f1(), VelocityField::zero()),
                    std::domain_error);
    CHECK_THROWS_AS(simulate_macro(s, 1.0, 0.9, ForceLaw::f1(), VelocityField::zero()),
                    std::domain_error);
}

TEST_CASE("the simulated step honors the declared diffusivity bound") {
    // power-law data above the unit diffusivity: dt must shrink accordingly
    const auto init = [](double x) { return 1.0 + std::max(0.0, 1.5 * (1.0 - x * x)); };
    const MacroState s0 = discretize(init, -2.0, 1e-2, 400);
    const auto traj =
        simulate_macro(s0, 1e-3, 0.1, ForceLaw::power(2.0), VelocityField::zero(), {}, 1000000);
    const double bound = ForceLaw::power(2.0).diffusivity_bound(s0.rho.maxCoeff());
    CHECK(bound > 1.0);
    CHECK(traj.dt == doctest::Approx(0.1 * 1e-4 / bound));
    CHECK(traj.states.back().rho.minCoeff() >= 1.0);
}
