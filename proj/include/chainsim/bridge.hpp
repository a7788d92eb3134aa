#pragma once

#include <vector>

#include "chainsim/macro.hpp"
#include "chainsim/micro.hpp"

namespace chainsim {

// Particle positions as equal-mass quantiles of a grid density: the
// cumulative integral of rho0 is piecewise linear and inverted exactly, so
// int_{x_0}^{x_i} rho0 = (i/N) total mass. Quantiles falling on a flat
// (zero-density) stretch of the cumulative land on its left edge. Throws
// std::domain_error when the grid carries no mass.
MicroState particles_from_density(const MacroState& rho0, int n_gaps);

// Piecewise-constant density 1/omega_i on each particle interval,
// cell-averaged onto the given uniform grid, zero outside the particle hull.
// Coincident particles are capped at rho_cap = 1e6; the number of capped
// intervals is reported through `capped` when given.
MacroState density_from_particles(const MicroState& state, double x_left, double dx, int cells,
                                  int* capped = nullptr);

// Same, on an automatically fitted grid covering the particle hull.
MacroState density_from_particles(const MicroState& state, double dx, int* capped = nullptr);

inline constexpr double rho_cap = 1e6;

struct ScaleComparison {
    double t = 0.0;
    double l1_error = 0.0;
};

// L1 distance between the particle-derived density and the grid density at
// the requested times, integrated over the macro grid. Throws NumericalError
// when a requested time is missing from either trajectory.
std::vector<ScaleComparison> compare_scales(const MicroTrajectory& micro,
                                            const MacroTrajectory& macro,
                                            const std::vector<double>& times);

}  // namespace chainsim
