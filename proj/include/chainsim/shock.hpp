#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chainsim/macro.hpp"
#include "chainsim/velocity_field.hpp"

namespace chainsim {

// Time series of a tracked jump discontinuity.
struct ShockPath {
    std::vector<double> times;
    std::vector<double> positions;       // x_*(t)
    std::vector<double> left_flux;       // d/dx f(1/rho) just left of the jump
    std::vector<double> right_density;   // rho just right of the jump
};

// Rankine-Hugoniot jump velocity (-left_flux)/(1 - right_density) + v.
// Throws NumericalError("degenerate jump") when right_density approaches 1
// (the jump dissolves and tracking hands back to the caller).
double rh_speed(double left_flux, double right_density, double v_at_shock);

// Jump velocity m (rho_left - 1)^(m-2) drho_left for the power-family flux
// (rho - 1)_+^m against a right state pinned at density 1.
double pme_jump_speed(double m, double rho_left, double drho_left);

enum class TrackStatus { Completed, JumpDissolved };

struct TrackResult {
    ShockPath path;
    TrackStatus status = TrackStatus::Completed;
    double stop_time = 0.0;
};

// Integrate the jump position through a sampled density trajectory with
// explicit Euler. At each snapshot the interface with the largest density
// jump within +-5 cells of the predicted location is used; the left flux is
// the one-sided difference of f(1/rho) over the two cells left of it
// (downwind side) and the right density is the first cell to its right
// (upwind side). Without x0, tracking starts from the globally largest jump.
// Throws NumericalError("lost shock") when no jump >= jump_threshold remains
// in the window; a dissolving jump (right density -> 1) ends tracking with
// status JumpDissolved.
TrackResult track_shock(const std::vector<MacroState>& snapshots, const ForceLaw& law,
                        const VelocityField& field, std::optional<double> x0 = {},
                        double jump_threshold = 0.1);

struct EquilibriumInterval {
    double a = 0.0;
    double b = 0.0;
    double residual_mass = 0.0;  // (b - a) - int_a^b rho0
    double residual_com = 0.0;   // (b^2 - a^2)/2 - int_a^b x rho0
};

// Solve for the equilibrium plateau [a, b] from conservation of mass and of
// the center of mass by damped Newton over the grid quadrature. The bracket
// (c, d) must have rho0 < 1 at both ends and rho0 > 1 somewhere inside.
EquilibriumInterval equilibrium_interval(const MacroState& rho0, double c, double d,
                                         double tol = 1e-8, int max_iters = 100);

// Maximal intervals where the cell density exceeds `level` (cell-resolution).
std::vector<std::pair<double, double>> plateau_intervals(const MacroState& state,
                                                         double level = 1.0);

// Outermost crossings of rho above `level`, linearly interpolated between
// cell centers. Throws std::runtime_error if no cell exceeds the level.
std::pair<double, double> support_edges(const MacroState& state, double level);

}  // namespace chainsim
