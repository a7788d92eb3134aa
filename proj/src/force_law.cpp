#include "chainsim/force_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chainsim {

ForceLaw ForceLaw::f1() { return ForceLaw(ForceKind::F1, 0.0, 1.0, {}); }

ForceLaw ForceLaw::f2() { return ForceLaw(ForceKind::F2, 0.0, 2.0, {}); }

ForceLaw ForceLaw::power(double m) {
    if (!(m >= 1.0))
        throw std::domain_error("power law exponent must satisfy m >= 1");
    return ForceLaw(ForceKind::PowerM, m, std::numeric_limits<double>::infinity(), {});
}

ForceLaw ForceLaw::table(std::vector<std::pair<double, double>> knots, double lipschitz) {
    if (knots.size() < 2)
        throw std::domain_error("table law needs at least two knots");
    bool has_unit_knot = false;
    double max_slope = 0.0;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& [w, f] = knots[i];
        if (!(w >= 0.0))
            throw std::domain_error("table knot omega must be nonnegative");
        if (!(f >= 0.0 && f <= 1.0))
            throw std::domain_error("table knot values must lie in [0,1]");
        if (w == 1.0 && f == 0.0) has_unit_knot = true;
        if (w >= 1.0 && f != 0.0)
            throw std::domain_error("table law must vanish for omega >= 1");
        if (i > 0) {
            const auto& [wp, fp] = knots[i - 1];
            if (!(w > wp))
                throw std::domain_error("table knots must be strictly increasing in omega");
            if (f > fp)
                throw std::domain_error("table law must be nonincreasing");
            max_slope = std::max(max_slope, (fp - f) / (w - wp));
        }
    }
    if (!has_unit_knot)
        throw std::domain_error("table law must contain the knot (1, 0)");
    if (!(lipschitz >= max_slope * (1.0 - 1e-12)))
        throw std::domain_error("declared Lipschitz constant below a table segment slope");
    return ForceLaw(ForceKind::Table, 0.0, lipschitz, std::move(knots));
}

double ForceLaw::operator()(double omega) const {
    if (!(omega >= 0.0))
        throw std::domain_error("force law argument must be nonnegative");
    if (kind_ == ForceKind::PowerM && omega < omega_floor)
        throw std::domain_error("power law argument below omega_floor");
    if (omega >= 1.0) return 0.0;
    switch (kind_) {
        case ForceKind::F1:
            return 1.0 - omega;
        case ForceKind::F2: {
            const double d = 1.0 - omega;
            return d * d;
        }
        case ForceKind::PowerM:
            return std::pow(1.0 / omega - 1.0, exponent_);
        case ForceKind::Table: {
            // constant extension left of the first knot
            if (omega <= knots_.front().first) return knots_.front().second;
            auto it = std::lower_bound(knots_.begin(), knots_.end(), omega,
                                       [](const auto& k, double w) { return k.first < w; });
            const auto& [w1, f1v] = *it;
            const auto& [w0, f0v] = *(it - 1);
            const double s = (omega - w0) / (w1 - w0);
            return f0v + s * (f1v - f0v);
        }
    }
    return 0.0;
}

double ForceLaw::flux_of_density(double rho) const {
    if (!(rho >= 0.0))
        throw std::domain_error("density must be nonnegative");
    if (rho == 0.0) return 0.0;
    double omega = 1.0 / rho;
    if (kind_ == ForceKind::PowerM && omega < omega_floor) omega = omega_floor;
    return (*this)(omega);
}

double ForceLaw::diffusivity(double rho) const {
    if (!(rho > 0.0))
        throw std::domain_error("diffusivity needs rho > 0");
    if (rho <= 1.0) return 0.0;
    const double omega = 1.0 / rho;  // < 1
    switch (kind_) {
        case ForceKind::F1:
            return 1.0 / (rho * rho);
        case ForceKind::F2:
            return 2.0 * (1.0 - omega) / (rho * rho);
        case ForceKind::PowerM:
            // -f'(1/rho) = m (rho-1)^(m-1) rho^2
            return exponent_ * std::pow(rho - 1.0, exponent_ - 1.0);
        case ForceKind::Table: {
            if (omega <= knots_.front().first) return 0.0;
            auto it = std::lower_bound(knots_.begin(), knots_.end(), omega,
                                       [](const auto& k, double w) { return k.first < w; });
            // at an exact knot, lower_bound lands on it and (it-1, it) is the
            // segment to its left
            const auto& [w1, f1v] = *it;
            const auto& [w0, f0v] = *(it - 1);
            const double slope = (f1v - f0v) / (w1 - w0);
            return -slope / (rho * rho);
        }
    }
    return 0.0;
}

double ForceLaw::diffusivity_bound(double rho_max) const {
    if (!(rho_max > 0.0))
        throw std::domain_error("diffusivity bound needs rho_max > 0");
    if (rho_max <= 1.0) return 0.0;
    switch (kind_) {
        case ForceKind::F1:
            // D = rho^-2 on rho > 1, sup approached at rho -> 1+
            return 1.0;
        case ForceKind::F2: {
            // D = 2(rho-1)/rho^3 peaks at rho = 3/2
            if (rho_max >= 1.5) return 8.0 / 27.0;
            return 2.0 * (rho_max - 1.0) / (rho_max * rho_max * rho_max);
        }
        case ForceKind::PowerM:
            if (exponent_ == 1.0) return 1.0;
            return exponent_ * std::pow(rho_max - 1.0, exponent_ - 1.0);
        case ForceKind::Table: {
            // D = |segment slope| * omega^2 over omega in [1/rho_max, 1)
            const double w_lo = 1.0 / rho_max;
            double bound = 0.0;
            for (std::size_t i = 1; i < knots_.size(); ++i) {
                const double w0 = knots_[i - 1].first;
                const double w1 = knots_[i].first;
                if (w1 <= w_lo || w0 >= 1.0) continue;
                const double slope = (knots_[i].second - knots_[i - 1].second) / (w1 - w0);
                const double w_hi = std::min(w1, 1.0);
                bound = std::max(bound, std::abs(slope) * w_hi * w_hi);
            }
            return bound;
        }
    }
    return 0.0;
}

}  // namespace chainsim
