#include "chainsim/shock.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chainsim/errors.hpp"

namespace chainsim {

double rh_speed(double left_flux, double right_density, double v_at_shock) {
    if (right_density >= 1.0 - 1e-9)
        throw NumericalError("degenerate jump", 0.0,
                             "right density at the interaction threshold; jump dissolves");
    return -left_flux / (1.0 - right_density) + v_at_shock;
}

double pme_jump_speed(double m, double rho_left, double drho_left) {
    if (!(rho_left > 1.0)) throw std::domain_error("pme_jump_speed needs rho_left > 1");
    return m * std::pow(rho_left - 1.0, m - 2.0) * drho_left;
}

namespace {

// interface j sits between cells j and j+1
int best_interface(const MacroState& s, int j_lo, int j_hi, double& jump) {
    int best = -1;
    jump = 0.0;
    for (int j = std::max(1, j_lo); j <= std::min(s.cells() - 3, j_hi); ++j) {
        const double d = std::abs(s.rho[j + 1] - s.rho[j]);
        if (d > jump) {
            jump = d;
            best = j;
        }
    }
    return best;
}

}  // namespace

TrackResult track_shock(const std::vector<MacroState>& snapshots, const ForceLaw& law,
                        const VelocityField& field, std::optional<double> x0,
                        double jump_threshold) {
    if (snapshots.size() < 2) throw std::domain_error("need at least two snapshots");
    if (!(jump_threshold > 0.0)) throw std::domain_error("jump_threshold must be positive");

    TrackResult result;
    const MacroState& first = snapshots.front();
    double xs;
    if (x0) {
        xs = *x0;
    } else {
        double jump;
        const int j = best_interface(first, 1, first.cells() - 3, jump);
        if (j < 0 || jump < jump_threshold)
            throw NumericalError("lost shock", first.t, "no jump above threshold in initial data");
        xs = first.x_left + (j + 1) * first.dx;
    }

    for (std::size_t k = 0; k < snapshots.size(); ++k) {
        const MacroState& s = snapshots[k];
        // predicted location must stay within the grid
        const int j_pred =
            static_cast<int>(std::floor((xs - s.x_left) / s.dx - 0.5));  // interface index near xs
        double jump;
        const int j = best_interface(s, j_pred - 5, j_pred + 5, jump);
        if (j < 0 || jump < jump_threshold)
            throw NumericalError("lost shock", s.t,
                                 "no jump above threshold within 5 cells of the prediction");

        const double lf = (law.flux_of_density(s.rho[j]) - law.flux_of_density(s.rho[j - 1])) / s.dx;
        const double rd = s.rho[j + 1];
        const double x_interface = s.x_left + (j + 1) * s.dx;

        double speed;
        try {
            speed = rh_speed(lf, rd, field(x_interface));
        } catch (const NumericalError&) {
            result.status = TrackStatus::JumpDissolved;
            result.stop_time = s.t;
            return result;
        }

        result.path.times.push_back(s.t);
        result.path.positions.push_back(xs);
        result.path.left_flux.push_back(lf);
        result.path.right_density.push_back(rd);

        if (k + 1 < snapshots.size()) xs += (snapshots[k + 1].t - s.t) * speed;
    }
    result.stop_time = snapshots.back().t;
    return result;
}

namespace {

// integral of rho over [a, b] against the piecewise-constant cell values
double cell_integral(const MacroState& s, double a, double b) {
    double total = 0.0;
    for (int i = 0; i < s.cells(); ++i) {
        const double lo = std::max(a, s.x_left + i * s.dx);
        const double hi = std::min(b, s.x_left + (i + 1) * s.dx);
        if (hi > lo) total += s.rho[i] * (hi - lo);
    }
    return total;
}

// integral of x rho over [a, b]
double cell_moment(const MacroState& s, double a, double b) {
    double total = 0.0;
    for (int i = 0; i < s.cells(); ++i) {
        const double lo = std::max(a, s.x_left + i * s.dx);
        const double hi = std::min(b, s.x_left + (i + 1) * s.dx);
        if (hi > lo) total += s.rho[i] * 0.5 * (hi * hi - lo * lo);
    }
    return total;
}

double value_at(const MacroState& s, double x) {
    const int i = static_cast<int>(std::floor((x - s.x_left) / s.dx));
    if (i < 0 || i >= s.cells()) return 0.0;
    return s.rho[i];
}

}  // namespace

EquilibriumInterval equilibrium_interval(const MacroState& rho0, double c, double d, double tol,
                                         int max_iters) {
    if (!(c < d)) throw std::domain_error("bracket must satisfy c < d");
    if (!(value_at(rho0, c) < 1.0 && value_at(rho0, d) < 1.0))
        throw std::domain_error("bracket ends must have rho0 < 1");

    // initial guess: hull of {rho0 > 1} inside the bracket, widened by the
    // excess mass split evenly between the two sides
    double p = 0.0, q = 0.0;
    bool found = false;
    for (int i = 0; i < rho0.cells(); ++i) {
        const double xc = rho0.cell_center(i);
        if (xc <= c || xc >= d) continue;
        if (rho0.rho[i] > 1.0) {
            const double lo = rho0.x_left + i * rho0.dx;
            const double hi = lo + rho0.dx;
            if (!found) {
                p = lo;
                q = hi;
                found = true;
            } else {
                q = hi;
            }
        }
    }
    if (!found) throw std::domain_error("rho0 never exceeds 1 inside the bracket");
    const double excess = cell_integral(rho0, p, q) - (q - p);
    double a = p - std::max(excess, 0.0) / 2.0;
    double b = q + std::max(excess, 0.0) / 2.0;

    auto residual = [&](double aa, double bb) {
        Eigen::Vector2d g;
        g[0] = (bb - aa) - cell_integral(rho0, aa, bb);
        g[1] = 0.5 * (bb * bb - aa * aa) - cell_moment(rho0, aa, bb);
        return g;
    };

    Eigen::Vector2d g = residual(a, b);
    for (int it = 0; it < max_iters; ++it) {
        if (std::abs(g[0]) <= tol && std::abs(g[1]) <= tol) {
            if (a < c || b > d)
                throw NumericalError("equilibrium bracket", rho0.t,
                                     "solution escaped the bracket");
            return {a, b, g[0], g[1]};
        }
        Eigen::Matrix2d jac;
        jac(0, 0) = -1.0 + value_at(rho0, a);
        jac(0, 1) = 1.0 - value_at(rho0, b);
        jac(1, 0) = a * (value_at(rho0, a) - 1.0);
        jac(1, 1) = b * (1.0 - value_at(rho0, b));
        const Eigen::Vector2d step = jac.fullPivLu().solve(g);

        // step halving until the residual norm decreases
        double lambda = 1.0;
        bool accepted = false;
        for (int h = 0; h < 60; ++h) {
            const double an = a - lambda * step[0];
            const double bn = b - lambda * step[1];
            const Eigen::Vector2d gn = residual(an, bn);
            if (gn.norm() < g.norm()) {
                a = an;
                b = bn;
                g = gn;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted)
            throw NumericalError("equilibrium newton", rho0.t,
                                 "damped step failed to reduce the residual");
    }
    throw NumericalError("equilibrium newton", rho0.t,
                         "no convergence within " + std::to_string(max_iters) + " iterations");
}

std::vector<std::pair<double, double>> plateau_intervals(const MacroState& state, double level) {
    std::vector<std::pair<double, double>> out;
    bool open = false;
    double start = 0.0;
    for (int i = 0; i < state.cells(); ++i) {
        const bool above = state.rho[i] > level;
        if (above && !open) {
            start = state.x_left + i * state.dx;
            open = true;
        } else if (!above && open) {
            out.emplace_back(start, state.x_left + i * state.dx);
            open = false;
        }
    }
    if (open) out.emplace_back(start, state.right_edge());
    return out;
}

std::pair<double, double> support_edges(const MacroState& state, double level) {
    const int m = state.cells();
    int first = -1, last = -1;
    for (int i = 0; i < m; ++i) {
        if (state.rho[i] > level) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (first < 0) throw std::runtime_error("no cell above the requested level");

    auto interp = [&](int inside, int outside) {
        // crossing between the two cell centers; clamp to the nearer edge
        // when there is no outside neighbor
        if (outside < 0 || outside >= m) return state.cell_center(inside);
        const double yi = state.rho[inside], yo = state.rho[outside];
        if (yi == yo) return state.cell_center(inside);
        const double s = (yi - level) / (yi - yo);
        return state.cell_center(inside) + s * (state.cell_center(outside) - state.cell_center(inside));
    };
    return {interp(first, first - 1), interp(last, last + 1)};
}

}  // namespace chainsim
