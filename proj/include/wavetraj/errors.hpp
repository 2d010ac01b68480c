#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace wavetraj {

// Base class for all library failures. `module` identifies the layer that
// raised the error (elliptic, wavefield, trajectory_ode, closed_form,
// abel_case, cli) so front ends can report provenance.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message)
        : std::runtime_error(message), module_(std::move(module)) {}

    const std::string& module() const { return module_; }

private:
    std::string module_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid or inconsistent configuration (bad constants, wrong branch, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Evaluation requested too close to a pole. Carries the nearest pole abscissa
// so callers can unwrap branches or reposition.
class PoleError : public Error {
public:
    PoleError(std::string module, const std::string& message, double pole)
        : Error(std::move(module), message), pole_(pole) {}

    double pole() const { return pole_; }

private:
    double pole_;
};

// Evaluation requested at (or too close to) a time where the trajectory is
// vertically asymptotic.
class AsymptoteError : public Error {
public:
    AsymptoteError(std::string module, const std::string& message, double time)
        : Error(std::move(module), message), time_(time) {}

    double time() const { return time_; }

private:
    double time_;
};

// Adaptive quadrature failed to converge; carries the offending subinterval.
class QuadratureError : public Error {
public:
    QuadratureError(std::string module, const std::string& message, double lo, double hi)
        : Error(std::move(module), message), lo_(lo), hi_(hi) {}

    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    double lo_;
    double hi_;
};

// The ODE integrator drove the step size below representable resolution.
class StepUnderflowError : public Error {
public:
    StepUnderflowError(std::string module, const std::string& message, double time)
        : Error(std::move(module), message), time_(time) {}

    double time() const { return time_; }

private:
    double time_;
};

// No valid parameter neighborhood exists around the requested point.
class EmptyDomainError : public Error {
public:
    using Error::Error;
};

// Filesystem failure while writing an artifact.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace wavetraj
