#include "chainsim/macro.hpp"

#include <cmath>
#include <stdexcept>

#include "chainsim/errors.hpp"

namespace chainsim {

namespace {

void check_boundary_quiet(const MacroState& before, const Eigen::ArrayXd& rho_new, double t) {
    const int m = before.cells();
    for (int i : {1, m - 2}) {
        const double old_v = before.rho[i];
        if (std::abs(rho_new[i] - old_v) > 1e-12 * (1.0 + std::abs(old_v)))
            throw NumericalError("boundary contamination", t,
                                 "support reached the grid edge; enlarge the domain");
    }
}

}  // namespace

namespace {

// f(1/rho) across the grid; vacuum cells give exactly 0, cells at or below
// the threshold give exactly 0, so degenerate regions stay bitwise frozen
void density_flux(const ForceLaw& law, const Eigen::ArrayXd& rho, Eigen::ArrayXd& flux) {
    switch (law.kind()) {
        case ForceKind::F1:
            flux = (rho > 1.0).select(1.0 - rho.inverse(), 0.0);
            break;
        case ForceKind::F2:
            flux = (rho > 1.0).select((1.0 - rho.inverse()).square(), 0.0);
            break;
        case ForceKind::PowerM:
            // (rho - 1)_+^m, with 1/rho floored at omega_floor
            if (law.exponent() == 1.0)
                flux = (rho > 1.0).select(rho.min(1.0 / ForceLaw::omega_floor) - 1.0, 0.0);
            else if (law.exponent() == 2.0)
                flux = (rho > 1.0).select((rho.min(1.0 / ForceLaw::omega_floor) - 1.0).square(),
                                          0.0);
            else
                flux = (rho > 1.0).select(
                    (rho.min(1.0 / ForceLaw::omega_floor) - 1.0).pow(law.exponent()), 0.0);
            break;
        case ForceKind::Table:
            flux.resize(rho.size());
            for (Eigen::Index i = 0; i < rho.size(); ++i) flux[i] = law.flux_of_density(rho[i]);
    }
}

}  // namespace

MacroState step_macro(const MacroState& state, double dt, const ForceLaw& law,
                      const VelocityField& field, const std::optional<GrowthParams>& growth,
                      bool legacy_drift_sign) {
    if (!(dt > 0.0)) throw std::domain_error("dt must be positive");
    if (!(state.dx > 0.0)) throw std::domain_error("dx must be positive");
    const int m = state.cells();
    if (m < 5) throw std::domain_error("grid needs at least 5 cells");
    const double t_next = state.t + dt;

    Eigen::ArrayXd flux(m);
    density_flux(law, state.rho, flux);

    Eigen::ArrayXd rho_new = state.rho;
    const double r = dt / (state.dx * state.dx);
    rho_new.segment(1, m - 2) +=
        r * (flux.segment(2, m - 2) - 2.0 * flux.segment(1, m - 2) + flux.segment(0, m - 2));

    if (!field.is_zero()) {
        // conservative upwind advection; interface i+1/2 sits at the shared
        // cell edge
        const double sign = legacy_drift_sign ? -1.0 : 1.0;
        Eigen::ArrayXd adv(m - 1);
        if (field.kind() == VelocityField::Kind::Constant) {
            const double c = sign * field.constant_value();
            adv = c * (c > 0.0 ? state.rho.head(m - 1) : state.rho.tail(m - 1));
        } else {
            for (int i = 0; i < m - 1; ++i) {
                const double c = sign * field(state.x_left + (i + 1) * state.dx);
                adv[i] = c * (c > 0.0 ? state.rho[i] : state.rho[i + 1]);
            }
        }
        const double q = dt / state.dx;
        rho_new.segment(1, m - 2) -= q * (adv.tail(m - 2) - adv.head(m - 2));
    }

    if (growth && growth->alpha > 0.0) {
        if (!(growth->rho_star > 0.0)) throw std::domain_error("rho_star must be positive");
        rho_new.segment(1, m - 2) +=
            dt * growth->alpha *
            (state.rho.segment(1, m - 2) * (growth->rho_star - state.rho.segment(1, m - 2)));
    }

    if ((rho_new < 0.0).any()) {
        int i = 0;
        while (rho_new[i] >= 0.0) ++i;
        throw NumericalError("negative density", t_next,
                             "cell " + std::to_string(i) + " (CFL violation; reduce dt)");
    }
    check_boundary_quiet(state, rho_new, t_next);

    MacroState out;
    out.t = t_next;
    out.x_left = state.x_left;
    out.dx = state.dx;
    out.rho = std::move(rho_new);
    return out;
}

double mass(const MacroState& state) { return state.rho.sum() * state.dx; }

double center_of_mass(const MacroState& state) {
    const double total = mass(state);
    if (std::abs(total) < 1e-12) throw std::domain_error("center of mass of zero-mass density");
    double moment = 0.0;
    for (int i = 0; i < state.cells(); ++i) moment += state.cell_center(i) * state.rho[i];
    return moment * state.dx / total;
}

double l2_norm(const MacroState& state) {
    return std::sqrt(state.rho.square().sum() * state.dx);
}

std::function<double(double)> bump_density(double h, double b, double m, double offset) {
    if (!(b > 0.0)) throw std::domain_error("bump half-width must be positive");
    if (!(h >= 0.0)) throw std::domain_error("bump height must be nonnegative");
    if (!(offset >= 0.0)) throw std::domain_error("offset must be nonnegative");
    return [h, b, m, offset](double x) {
        const double d = x - m;
        if (std::abs(d) >= b) return offset;
        return offset + h * std::exp(b * b / (d * d - b * b));
    };
}

std::function<double(double)> waiting_time_density() {
    return [](double x) {
        const double a = std::abs(x);
        if (a > 0.25) return 1.0;
        const double a2 = a * a, a3 = a2 * a;
        return -12800.0 * a3 * a3 + 15360.0 * a3 * a2 - 7200.0 * a2 * a2 + 1600.0 * a3 -
               150.0 * a2 + 13.0 / 8.0;
    };
}

MacroState discretize(const std::function<double(double)>& rho0, double x_left, double dx,
                      int cells, double t) {
    if (!(dx > 0.0)) throw std::domain_error("dx must be positive");
    if (cells < 5) throw std::domain_error("grid needs at least 5 cells");
    MacroState s;
    s.t = t;
    s.x_left = x_left;
    s.dx = dx;
    s.rho.resize(cells);
    for (int i = 0; i < cells; ++i) {
        const double v = rho0(s.cell_center(i));
        if (!(v >= 0.0)) throw std::domain_error("initial density must be nonnegative");
        s.rho[i] = v;
    }
    return s;
}

MacroTrajectory simulate_macro(const MacroState& initial, double t_final, double cfl_ratio,
                               const ForceLaw& law, const VelocityField& field,
                               const std::optional<GrowthParams>& growth, int sample_every,
                               bool legacy_drift_sign) {
    if (!(t_final > 0.0)) throw std::domain_error("t_final must be positive");
    if (!(cfl_ratio > 0.0 && cfl_ratio <= 0.5)) throw std::domain_error("cfl_ratio out of range");
    if (sample_every < 1) throw std::domain_error("sample_every must be positive");

    const double dx2 = initial.dx * initial.dx;
    const double bound0 = law.diffusivity_bound(std::max(initial.rho.maxCoeff(), 1e-300));
    const double dt = cfl_ratio * dx2 / std::max(1.0, bound0);
    const double t_end = initial.t + t_final;
    const long n_steps = std::max<long>(1, static_cast<long>(std::ceil(t_final / dt - 1e-12)));

    MacroTrajectory traj;
    traj.dt = dt;
    traj.states.push_back(initial);

    MacroState cur = initial;
    for (long k = 0; k < n_steps; ++k) {
        const bool last = (k == n_steps - 1);
        // never exceed dt; time stamps come from k*dt so they cannot drift
        const double step_dt = last ? std::min(dt, t_end - cur.t) : dt;
        if (!(step_dt > 0.0)) break;
        // densities may grow (growth term); re-check the stability bound
        const double bound = law.diffusivity_bound(std::max(cur.rho.maxCoeff(), 1e-300));
        if (step_dt * std::max(1.0, bound) > cfl_ratio * dx2 * (1.0 + 1e-12))
            throw NumericalError("cfl violation", cur.t,
                                 "diffusivity bound grew beyond the step size");
        cur = step_macro(cur, step_dt, law, field, growth, legacy_drift_sign);
        cur.t = last ? t_end : initial.t + static_cast<double>(k + 1) * dt;
        if (last || (k + 1) % sample_every == 0) traj.states.push_back(cur);
    }
    return traj;
}

}  // namespace chainsim
