#pragma once

#include <stdexcept>
#include <string>

namespace chainsim {

// Runtime failure of a numerical scheme. Carries the simulation time at which
// the offending quantity was detected so front-ends can report it.
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string quantity, double time, const std::string& detail)
        : std::runtime_error("[t=" + std::to_string(time) + "] " + quantity + ": " + detail),
          quantity_(std::move(quantity)),
          time_(time) {}

    const std::string& quantity() const { return quantity_; }
    double time() const { return time_; }

private:
    std::string quantity_;
    double time_;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chainsim
