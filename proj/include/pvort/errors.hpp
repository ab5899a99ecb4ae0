#pragma once

#include <stdexcept>
#include <string>

namespace pvort {

/// Two vortices are too close for the chosen regularization (or coincide at
/// sigma = 0); carries the offending pair in the message.
struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An implicit solve did not reach the requested tolerance.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double residual_, int iterations_)
        : std::runtime_error(what), residual(residual_), iterations(iterations_) {}
    double residual = 0.0;
    int iterations = 0;
};

/// A step could not be completed (e.g. no real multiplier in a two-step update).
struct step_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (bad key, incompatible scenario/integrator, ...).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pvort
