#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chainsim/bridge.hpp"
#include "chainsim/macro.hpp"
#include "chainsim/micro.hpp"
#include "chainsim/shock.hpp"

namespace chainsim::csv {

// shortest-width fixed formatting used for every exported number; writing is
// deterministic byte for byte
std::string format(double v);

void write_micro_trajectory(const std::filesystem::path& file, const MicroTrajectory& traj);
void write_micro_diagnostics(const std::filesystem::path& file, const MicroTrajectory& traj);
void write_macro_snapshots(const std::filesystem::path& file, const MacroTrajectory& traj);
void write_macro_diagnostics(const std::filesystem::path& file, const MacroTrajectory& traj);
void write_shock_path(const std::filesystem::path& file, const ShockPath& path);
void write_comparison(const std::filesystem::path& file,
                      const std::vector<ScaleComparison>& comparison, int n_gaps, double dx);

// two-column table `omega,f`
std::vector<std::pair<double, double>> read_table_knots(const std::filesystem::path& file);

// grid density `x,rho` with uniform spacing (x are cell centers)
MacroState read_density_csv(const std::filesystem::path& file);

// particle positions `i,x`
MicroState read_positions_csv(const std::filesystem::path& file);

}  // namespace chainsim::csv
