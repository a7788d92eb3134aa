#include "chainsim/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chainsim/errors.hpp"

namespace chainsim {

MicroState particles_from_density(const MacroState& rho0, int n_gaps) {
    if (n_gaps < 1) throw std::domain_error("need at least one gap");
    const int m = rho0.cells();

    // cumulative integral at cell edges; piecewise linear in between
    std::vector<double> cum(static_cast<std::size_t>(m) + 1, 0.0);
    for (int i = 0; i < m; ++i) cum[i + 1] = cum[i] + rho0.rho[i] * rho0.dx;
    const double total = cum[m];
    if (!(total > 0.0)) throw std::domain_error("density carries no mass");

    MicroState s;
    s.t = rho0.t;
    s.x.resize(n_gaps + 1);
    int cell = 0;
    for (int i = 0; i <= n_gaps; ++i) {
        const double target = total * static_cast<double>(i) / static_cast<double>(n_gaps);
        // smallest x with cumulative >= target, i.e. the left edge of any
        // flat stretch at that level
        while (cell < m && cum[cell + 1] < target) ++cell;
        if (cell >= m) {
            s.x[i] = rho0.right_edge();
            continue;
        }
        const double lo = rho0.x_left + cell * rho0.dx;
        if (rho0.rho[cell] > 0.0)
            s.x[i] = lo + std::max(0.0, target - cum[cell]) / rho0.rho[cell];
        else
            s.x[i] = lo;  // cumulative is flat here and already >= target
    }
    return s;
}

MacroState density_from_particles(const MicroState& state, double x_left, double dx, int cells,
                                  int* capped) {
    const int n = state.gap_count();
    if (n < 1) throw std::domain_error("need at least two particles");
    if (!(dx > 0.0)) throw std::domain_error("dx must be positive");
    if (cells < 1) throw std::domain_error("need at least one cell");
    if (!state.ordered()) throw std::domain_error("positions not ordered");

    int n_capped = 0;
    MacroState out;
    out.t = state.t;
    out.x_left = x_left;
    out.dx = dx;
    out.rho = Eigen::ArrayXd::Zero(cells);

    // overlap-weighted average of the piecewise-constant density 1/omega
    const double nd = static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        const double a = state.x[i];
        const double b = state.x[i + 1];
        const double w = nd * (b - a);
        double level;
        if (w > 0.0) {
            level = std::min(1.0 / w, rho_cap);
            if (1.0 / w > rho_cap) ++n_capped;
        } else {
            ++n_capped;
            continue;  // zero-width interval carries no resampled mass
        }
        int j0 = static_cast<int>(std::floor((a - x_left) / dx));
        int j1 = static_cast<int>(std::floor((b - x_left) / dx));
        j0 = std::max(j0, 0);
        j1 = std::min(j1, cells - 1);
        for (int j = j0; j <= j1; ++j) {
            const double lo = std::max(a, x_left + j * dx);
            const double hi = std::min(b, x_left + (j + 1) * dx);
            if (hi > lo) out.rho[j] += level * (hi - lo) / dx;
        }
    }
    if (capped) *capped = n_capped;
    return out;
}

MacroState density_from_particles(const MicroState& state, double dx, int* capped) {
    const double lo = state.x.minCoeff();
    const double hi = state.x.maxCoeff();
    const int cells = std::max(1, static_cast<int>(std::ceil((hi - lo) / dx - 1e-12)));
    return density_from_particles(state, lo, dx, cells, capped);
}

namespace {

template <class Traj>
const auto& state_at(const Traj& traj, double t) {
    for (const auto& s : traj.states)
        if (std::abs(s.t - t) <= 1e-9 * std::max(1.0, std::abs(t))) return s;
    throw NumericalError("time alignment", t, "requested time missing from trajectory");
}

}  // namespace

std::vector<ScaleComparison> compare_scales(const MicroTrajectory& micro,
                                            const MacroTrajectory& macro,
                                            const std::vector<double>& times) {
    std::vector<ScaleComparison> out;
    out.reserve(times.size());
    for (double t : times) {
        const MicroState& ms = state_at(micro, t);
        const MacroState& gs = state_at(macro, t);
        const MacroState md = density_from_particles(ms, gs.x_left, gs.dx, gs.cells());
        out.push_back({t, (md.rho - gs.rho).abs().sum() * gs.dx});
    }
    return out;
}

}  // namespace chainsim
