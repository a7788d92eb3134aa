#include "chainsim/micro.hpp"

#include <cmath>
#include <stdexcept>

#include "chainsim/errors.hpp"

namespace chainsim {

bool MicroState::ordered() const {
    for (Eigen::Index i = 1; i < x.size(); ++i)
        if (x[i] < x[i - 1]) return false;
    return true;
}

Eigen::ArrayXd gaps(const MicroState& state) {
    const int n = state.gap_count();
    if (n < 1) throw std::domain_error("need at least two particles");
    return static_cast<double>(n) * (state.x.tail(n) - state.x.head(n));
}

MicroState positions_from_gaps(const Eigen::ArrayXd& omega, double x0, double t) {
    const Eigen::Index n = omega.size();
    if (n < 1) throw std::domain_error("need at least one gap");
    MicroState s;
    s.t = t;
    s.x.resize(n + 1);
    s.x[0] = x0;
    const double ds = 1.0 / static_cast<double>(n);
    for (Eigen::Index i = 0; i < n; ++i) s.x[i + 1] = s.x[i] + ds * omega[i];
    return s;
}

MicroDiagnostics diagnose(const MicroState& state) {
    const int n = state.gap_count();
    if (n < 1) throw std::domain_error("need at least two particles");
    const Eigen::ArrayXd omega = gaps(state);
    MicroDiagnostics d;
    d.t = state.t;
    d.xbar = state.x.mean();
    d.variance = (state.x - d.xbar).square().sum() / static_cast<double>(n);
    d.spread = state.x[n] - state.x[0];
    d.tv_omega = n > 1 ? (omega.tail(n - 1) - omega.head(n - 1)).abs().sum() : 0.0;
    d.omega_min = omega.minCoeff();
    d.omega_max = omega.maxCoeff();
    return d;
}

namespace {

// rhs of the scaled system at candidate positions y; forces one-sided at the
// chain ends. Gaps are clamped at 0 for the force evaluation: transient
// fixed-point iterates may momentarily cross. The two built-in laws are
// inlined; this loop dominates every particle run.
void eval_rhs(const Eigen::ArrayXd& y, const ForceLaw& law, const VelocityField& field,
              Eigen::ArrayXd& force, Eigen::ArrayXd& rhs) {
    const Eigen::Index np = y.size();
    const Eigen::Index n = np - 1;
    const double nd = static_cast<double>(n);
    switch (law.kind()) {
        case ForceKind::F1:
            for (Eigen::Index i = 0; i < n; ++i) {
                const double w = nd * (y[i + 1] - y[i]);
                force[i] = w >= 1.0 ? 0.0 : (w > 0.0 ? 1.0 - w : 1.0);
            }
            break;
        case ForceKind::F2:
            for (Eigen::Index i = 0; i < n; ++i) {
                const double w = nd * (y[i + 1] - y[i]);
                const double d = w >= 1.0 ? 0.0 : (w > 0.0 ? 1.0 - w : 1.0);
                force[i] = d * d;
            }
            break;
        default:
            for (Eigen::Index i = 0; i < n; ++i) {
                const double w = nd * (y[i + 1] - y[i]);
                force[i] = law(w > 0.0 ? w : 0.0);
            }
    }
    rhs[0] = -nd * force[0] + field(y[0]);
    for (Eigen::Index i = 1; i < n; ++i)
        rhs[i] = nd * (force[i - 1] - force[i]) + field(y[i]);
    rhs[n] = nd * force[n - 1] + field(y[n]);
}

}  // namespace

MicroState step_implicit(const MicroState& state, double dt, const ForceLaw& law,
                         const VelocityField& field, int fp_iters) {
    if (!(dt > 0.0)) throw std::domain_error("dt must be positive");
    if (fp_iters < 1) throw std::domain_error("fp_iters must be positive");
    if (!law.micro_admissible())
        throw std::domain_error("force law not admissible for the particle system");
    const Eigen::Index np = state.x.size();
    if (np < 2) throw std::domain_error("need at least two particles");

    const double t_next = state.t + dt;
    Eigen::ArrayXd y = state.x;
    Eigen::ArrayXd y_next(np), force(np - 1), rhs(np);
    std::vector<double> residual(static_cast<std::size_t>(fp_iters));
    for (int k = 0; k < fp_iters; ++k) {
        eval_rhs(y, law, field, force, rhs);
        y_next = state.x + dt * rhs;
        residual[static_cast<std::size_t>(k)] = (y_next - y).abs().maxCoeff();
        y.swap(y_next);
    }

    // residual must keep contracting near the end of the sweep, unless it
    // already sits at the floating-point floor
    if (fp_iters >= 6) {
        const double r_last = residual[static_cast<std::size_t>(fp_iters - 1)];
        const double r_ref = residual[static_cast<std::size_t>(fp_iters - 6)];
        const double floor = 1e-14 * (1.0 + state.x.abs().maxCoeff());
        if (r_last > floor && r_last >= r_ref)
            throw NumericalError("fixed-point residual", t_next,
                                 "no contraction over the final 5 iterations (CFL violation; "
                                 "reduce dt)");
    }

    for (Eigen::Index i = 1; i < np; ++i)
        if (y[i] < y[i - 1])
            throw NumericalError("particle order", t_next, "positions not nondecreasing");

    MicroState out;
    out.t = t_next;
    out.x = std::move(y);
    return out;
}

MicroTrajectory simulate_micro(const MicroState& initial, double t_final, double dt,
                               const ForceLaw& law, const VelocityField& field, int fp_iters,
                               int sample_every) {
    if (!(t_final > 0.0)) throw std::domain_error("t_final must be positive");
    if (!(dt > 0.0)) throw std::domain_error("dt must be positive");
    if (sample_every < 1) throw std::domain_error("sample_every must be positive");
    if (!initial.ordered()) throw std::domain_error("initial positions not ordered");

    const double t_end = initial.t + t_final;
    const long n_steps = std::max<long>(1, static_cast<long>(std::ceil(t_final / dt - 1e-12)));

    MicroTrajectory traj;
    traj.states.push_back(initial);
    traj.diagnostics.push_back(diagnose(initial));

    MicroState cur = initial;
    for (long k = 0; k < n_steps; ++k) {
        const bool last = (k == n_steps - 1);
        // never exceed dt; time stamps come from k*dt so they cannot drift
        const double step_dt = last ? std::min(dt, t_end - cur.t) : dt;
        if (!(step_dt > 0.0)) break;
        cur = step_implicit(cur, step_dt, law, field, fp_iters);
        cur.t = last ? t_end : initial.t + static_cast<double>(k + 1) * dt;
        if (last || (k + 1) % sample_every == 0) {
            traj.states.push_back(cur);
            traj.diagnostics.push_back(diagnose(cur));
        }
    }
    return traj;
}

std::pair<double, double> minmax_envelope(const Eigen::ArrayXd& omega0,
                                          const VelocityField& field, double t) {
    if (!(t >= 0.0)) throw std::domain_error("t must be nonnegative");
    if (omega0.size() < 1) throw std::domain_error("need at least one gap");
    const double w_min = omega0.minCoeff();
    const double w_max = std::max(1.0, omega0.maxCoeff());
    const double g = field.gamma();
    return {w_min * std::exp(-g * t), w_max * std::exp(g * t)};
}

double variance_rate(const MicroState& state, const ForceLaw& law, const VelocityField& field) {
    const int n = state.gap_count();
    if (n < 1) throw std::domain_error("need at least two particles");
    const Eigen::ArrayXd omega = gaps(state);
    double interaction = 0.0;
    for (int i = 0; i < n; ++i) interaction += law(std::max(omega[i], 0.0)) * omega[i];

    // sum_i (x_i - xbar) sum_{j != i} v(x_j) = -sum_i (x_i - xbar) v(x_i),
    // since sum_i (x_i - xbar) = 0
    const double xbar = state.x.mean();
    double coupling = 0.0;
    for (Eigen::Index i = 0; i < state.x.size(); ++i)
        coupling += (state.x[i] - xbar) * field(state.x[i]);

    return 2.0 / static_cast<double>(n) * (interaction + coupling);
}

MicroState averaged_positions(const Eigen::ArrayXd& omega, double xbar, double t) {
    const Eigen::Index n = omega.size();
    if (n < 1) throw std::domain_error("need at least one gap");
    const double ds = 1.0 / static_cast<double>(n);

    double weighted = 0.0;  // sum_j (1 - (j-1) ds) omega_j, j = 1..N
    for (Eigen::Index j = 0; j < n; ++j)
        weighted += (1.0 - static_cast<double>(j) * ds) * omega[j];

    MicroState s;
    s.t = t;
    s.x.resize(n + 1);
    s.x[0] = xbar - ds / (1.0 + ds) * weighted;
    for (Eigen::Index i = 0; i < n; ++i) s.x[i + 1] = s.x[i] + ds * omega[i];
    return s;
}

}  // namespace chainsim
