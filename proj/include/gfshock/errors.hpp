#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gfshock {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidProfile : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Rankine-Hugoniot quotient requested for a zero state jump.
class NoJump : public Error {
public:
    using Error::Error;
};

/// The leading coefficient of a profile ODE vanishes inside the ramp.
class ResonantProfile : public Error {
public:
    using Error::Error;
};

class NoTravelingWaveSpeed : public Error {
public:
    using Error::Error;
};

/// Some but not all components of a jump vector vanish.
class DegenerateJump : public Error {
public:
    using Error::Error;
};

class NoAdmissibleMiddleState : public Error {
public:
    using Error::Error;
};

/// A Riemann fan spans more than half a cell within one step.
class CflViolation : public Error {
public:
    using Error::Error;
};

/// Semi-Lagrangian displacement exceeds the grid spacing.
class StabilityViolation : public Error {
public:
    using Error::Error;
};

/// Carries every violation found while validating a configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out;
        for (const auto& item : items) {
            if (!out.empty()) out += "; ";
            out += item;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

}  // namespace gfshock
