#pragma once

#include <utility>
#include <vector>

namespace chainsim {

// External velocity v(x) with a queryable Lipschitz bound gamma = sup |v'|.
// Piecewise-linear fields extend as constants beyond the outermost knots.
class VelocityField {
public:
    static VelocityField zero();
    static VelocityField constant(double c);
    static VelocityField piecewise_linear(std::vector<std::pair<double, double>> knots);

    double operator()(double x) const;
    double gamma() const { return gamma_; }
    bool is_zero() const { return kind_ == Kind::Zero; }

    enum class Kind { Zero, Constant, PiecewiseLinear };
    Kind kind() const { return kind_; }
    double constant_value() const { return c_; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

private:
    VelocityField(Kind kind, double c, double gamma, std::vector<std::pair<double, double>> knots)
        : kind_(kind), c_(c), gamma_(gamma), knots_(std::move(knots)) {}

    Kind kind_;
    double c_ = 0.0;
    double gamma_ = 0.0;
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace chainsim
