#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "chainsim/force_law.hpp"
#include "chainsim/velocity_field.hpp"

namespace chainsim {

// Chain of N+1 ordered particles at scaled time t. The scaling couples the
// particle count to the gap variables: omega_i = N (x_i - x_{i-1}).
struct MicroState {
    double t = 0.0;
    Eigen::ArrayXd x;  // nondecreasing positions x_0 .. x_N

    int gap_count() const { return static_cast<int>(x.size()) - 1; }
    bool ordered() const;
};

// Gap variables omega_i = N (x_i - x_{i-1}), i = 1..N.
Eigen::ArrayXd gaps(const MicroState& state);

// Inverse of gaps(): x_i = x0 + (1/N) sum_{j<=i} omega_j.
MicroState positions_from_gaps(const Eigen::ArrayXd& omega, double x0, double t = 0.0);

struct MicroDiagnostics {
    double t = 0.0;
    double xbar = 0.0;       // center of mass
    double variance = 0.0;   // (1/N) sum (x_i - xbar)^2
    double spread = 0.0;     // x_N - x_0
    double tv_omega = 0.0;   // sum |omega_{i+1} - omega_i|
    double omega_min = 0.0;
    double omega_max = 0.0;
};

MicroDiagnostics diagnose(const MicroState& state);

// One implicit Euler step of the particle system, solved by Jacobi-style
// fixed-point sweeps: x^(k+1) = x^n + dt * rhs(x^(k)), starting at x^n.
// Boundary particles use the one-sided forces. Throws NumericalError when the
// sweep residual fails to contract over the final five iterations (reduce dt)
// or when the output loses the particle order.
MicroState step_implicit(const MicroState& state, double dt, const ForceLaw& law,
                         const VelocityField& field, int fp_iters = 40);

struct MicroTrajectory {
    std::vector<MicroState> states;            // at sampled times only
    std::vector<MicroDiagnostics> diagnostics;  // parallel to states
};

// Repeated step_implicit up to t = t_final (the last step is shortened to
// land there exactly). States and diagnostics are recorded at step 0, every
// sample_every-th step, and the final step.
MicroTrajectory simulate_micro(const MicroState& initial, double t_final, double dt,
                               const ForceLaw& law, const VelocityField& field,
                               int fp_iters = 40, int sample_every = 1);

// A-priori gap envelope (omega_min e^{-gamma t}, omega_max e^{gamma t}) with
// omega_min = min omega_{j,0} and omega_max = max{1, max omega_{j,0}}.
std::pair<double, double> minmax_envelope(const Eigen::ArrayXd& omega0,
                                          const VelocityField& field, double t);

// Exact rate of change of the position variance:
// (2/N) [ sum_i f(omega_i) omega_i - sum_i (x_i - xbar) sum_{j != i} v(x_j) ].
double variance_rate(const MicroState& state, const ForceLaw& law, const VelocityField& field);

// Positions reconstructed from gaps and the center of mass:
// x_i = xbar - ds/(1+ds) sum_j (1-(j-1) ds) omega_j + ds sum_{j<=i} omega_j.
MicroState averaged_positions(const Eigen::ArrayXd& omega, double xbar, double t = 0.0);

}  // namespace chainsim
