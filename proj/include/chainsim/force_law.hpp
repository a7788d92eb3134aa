#pragma once

#include <limits>
#include <utility>
#include <vector>

namespace chainsim {

enum class ForceKind { F1, F2, PowerM, Table };

// Dimensionless repulsion nonlinearity f. All built-in laws are nonincreasing
// with supp(f) = [0,1]; f1 and f2 map into [0,1], the power family
// f(w) = (1/w - 1)_+^m is unbounded near w = 0 and is therefore only admitted
// by the density solver, not by the particle solver.
class ForceLaw {
public:
    static ForceLaw f1();
    static ForceLaw f2();
    static ForceLaw power(double m);
    // Piecewise linear law through the given (omega, f) knots. Must be sorted,
    // nonincreasing, valued in [0,1], and contain a knot (1, 0); `lipschitz`
    // must dominate every segment slope.
    static ForceLaw table(std::vector<std::pair<double, double>> knots, double lipschitz);

    ForceKind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

    // Lipschitz constant of f (f1: 1, f2: 2, table: declared). Infinite for
    // the power family.
    double lipschitz() const { return lipschitz_; }

    // The particle system requires f bounded by 1; the power family is not.
    bool micro_admissible() const { return kind_ != ForceKind::PowerM; }

    // Smallest admissible argument. The power family refuses w below this
    // floor to stay clear of the singularity at w = 0.
    static constexpr double omega_floor = 1e-8;

    // f(w). Throws std::domain_error for w < 0, or w < omega_floor on the
    // power family. Exactly 0 for w >= 1.
    double operator()(double omega) const;

    // f(1/rho) with guarded evaluation: rho = 0 is vacuum (f(inf) = 0) and
    // the power-family floor is applied to 1/rho.
    double flux_of_density(double rho) const;

    // Degenerate diffusivity D(rho) = -rho^-2 f'(1/rho); exactly 0 for
    // rho <= 1. Kinks use the one-sided derivative from the left (interior)
    // segment. Throws std::domain_error for rho <= 0.
    double diffusivity(double rho) const;

    // Upper bound for D over densities in (0, rho_max].
    double diffusivity_bound(double rho_max) const;

private:
    ForceLaw(ForceKind kind, double exponent, double lipschitz,
             std::vector<std::pair<double, double>> knots)
        : kind_(kind), exponent_(exponent), lipschitz_(lipschitz), knots_(std::move(knots)) {}

    ForceKind kind_;
    double exponent_ = 0.0;
    double lipschitz_ = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace chainsim
