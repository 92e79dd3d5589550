#pragma once

#include <stdexcept>
#include <string>

namespace jcdimer {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or configuration (bad parameter values, domains).
struct DomainError : Error {
    using Error::Error;
};

/// Input is formally valid but numerically degenerate (vanishing denominator).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Iterative solver failed to reach the requested residual.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double residual)
        : Error(msg), final_residual(residual) {}
    double final_residual;
};

/// Linear system singular to working precision.
struct SingularityError : Error {
    using Error::Error;
};

/// Adaptive ODE integration could not proceed.
struct IntegrationError : Error {
    IntegrationError(const std::string& msg, double t_last)
        : Error(msg), last_good_time(t_last) {}
    double last_good_time;
};

/// Fock-space cutoff too small for the requested state.
struct CutoffError : Error {
    using Error::Error;
};

/// Quantum propagation violated its norm/energy contract.
struct PropagationError : Error {
    using Error::Error;
};

/// Phase-space grid does not capture enough probability mass.
struct GridError : Error {
    using Error::Error;
};

/// Dense eigensolver or other numeric kernel failed.
struct NumericError : Error {
    using Error::Error;
};

/// Signal has no usable spectral peak or fit window.
struct SignalError : Error {
    using Error::Error;
};

}  // namespace jcdimer
