#include "chainsim/velocity_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chainsim {

VelocityField VelocityField::zero() { return VelocityField(Kind::Zero, 0.0, 0.0, {}); }

VelocityField VelocityField::constant(double c) { return VelocityField(Kind::Constant, c, 0.0, {}); }

VelocityField VelocityField::piecewise_linear(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2)
        throw std::domain_error("piecewise linear velocity needs at least two knots");
    double gamma = 0.0;
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i].first > knots[i - 1].first))
            throw std::domain_error("velocity knots must be strictly increasing in x");
        gamma = std::max(gamma, std::abs((knots[i].second - knots[i - 1].second) /
                                         (knots[i].first - knots[i - 1].first)));
    }
    return VelocityField(Kind::PiecewiseLinear, 0.0, gamma, std::move(knots));
}

double VelocityField::operator()(double x) const {
    switch (kind_) {
        case Kind::Zero:
            return 0.0;
        case Kind::Constant:
            return c_;
        case Kind::PiecewiseLinear: {
            if (x <= knots_.front().first) return knots_.front().second;
            if (x >= knots_.back().first) return knots_.back().second;
            auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                                       [](const auto& k, double v) { return k.first < v; });
            const auto& [x1, v1] = *it;
            const auto& [x0, v0] = *(it - 1);
            return v0 + (x - x0) / (x1 - x0) * (v1 - v0);
        }
    }
    return 0.0;
}

}  // namespace chainsim
