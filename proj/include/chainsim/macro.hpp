#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <vector>

#include "chainsim/force_law.hpp"
#include "chainsim/velocity_field.hpp"

namespace chainsim {

// Cell-centered density on a uniform grid; cell i spans
// [x_left + i dx, x_left + (i+1) dx]. The outermost cells hold the far-field
// value and never change; dynamics reaching them abort the run (domain too
// small).
struct MacroState {
    double t = 0.0;
    double x_left = 0.0;
    double dx = 1.0;
    Eigen::ArrayXd rho;

    int cells() const { return static_cast<int>(rho.size()); }
    double cell_center(int i) const { return x_left + (i + 0.5) * dx; }
    double right_edge() const { return x_left + cells() * dx; }
};

struct GrowthParams {
    double alpha = 0.0;     // logistic rate, >= 0
    double rho_star = 1.0;  // carrying capacity, > 0
};

// One explicit step:
//   rho_i += (dt/dx^2) [F_{i+1} - 2 F_i + F_{i-1}] + drift + source,
// with F = f(1/rho), first-order upwind drift for -d/dx(v rho) (density
// transported along +v; legacy_drift_sign flips the transport direction), and
// source = dt alpha rho (rho_star - rho). Edge cells are held fixed.
// Throws NumericalError on negative densities (CFL violation) or when the
// update reaches the second-outermost cells (boundary contamination).
MacroState step_macro(const MacroState& state, double dt, const ForceLaw& law,
                      const VelocityField& field,
                      const std::optional<GrowthParams>& growth = {},
                      bool legacy_drift_sign = false);

// Midpoint-rule integrals over the grid.
double mass(const MacroState& state);
double center_of_mass(const MacroState& state);  // throws on near-zero mass
double l2_norm(const MacroState& state);

// Smooth bump offset + h exp(b^2 / ((x-m)^2 - b^2)) on |x-m| < b, offset
// outside; sums of bumps are built by adding initializers.
std::function<double(double)> bump_density(double h, double b, double m, double offset);

// Degree-six polynomial in |x| on [-1/4, 1/4], 1 outside; its excess over 1
// has a fifth-order zero at the support edge, so the edge flux gradient
// vanishes there.
std::function<double(double)> waiting_time_density();

// Sample an initializer at the cell centers of a fresh grid.
MacroState discretize(const std::function<double(double)>& rho0, double x_left, double dx,
                      int cells, double t = 0.0);

struct MacroTrajectory {
    std::vector<MacroState> states;  // at sampled times only
    double dt = 0.0;                 // step actually used
};

// Repeated step_macro with dt = cfl_ratio dx^2 / max(1, L_D), where L_D is
// the diffusivity bound over the initial densities; the bound is re-checked
// against the current state every step. Snapshots at step 0, every
// sample_every-th step, and t_final.
MacroTrajectory simulate_macro(const MacroState& initial, double t_final, double cfl_ratio,
                               const ForceLaw& law, const VelocityField& field,
                               const std::optional<GrowthParams>& growth = {},
                               int sample_every = 1, bool legacy_drift_sign = false);

}  // namespace chainsim
