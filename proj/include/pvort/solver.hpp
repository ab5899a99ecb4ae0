#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "pvort/errors.hpp"
#include "pvort/statevec.hpp"

namespace pvort {

/// Stopping rule for implicit solves: max-norm of the iterate update.
struct SolverConfig {
    double tolerance = 1e-13;
    int max_iterations = 200;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;
    double damping = 1.0;
};

/// Fixed-point iteration x <- map(x) until the max-norm distance between an
/// iterate and its image drops below cfg.tolerance.
///
/// A diverging iteration is retried with relaxation x <- (1-w) x + w map(x),
/// w = 1/2, 1/4, 1/8.  The midpoint maps of this library are contractions at
/// small steps but lose that property at large h for states with strong
/// couplings; under-relaxation restores convergence there because the maps'
/// linearizations have near-imaginary spectra.  The fixed point itself is
/// unchanged by relaxation.  Throws convergence_error when every attempt is
/// exhausted.  `blend(x, fx, w)` must be available for the state type.
template <class State, class Map, class Dist>
State solve_fixed_point(Map&& map, const State& guess, const SolverConfig& cfg,
                        Dist&& dist, SolveStats* stats = nullptr) {
    double last_residual = 0.0;
    int attempts_run = 0;
    for (double omega : {1.0, 0.5, 0.25, 0.125}) {
        ++attempts_run;
        State x = guess;
        double first_residual = -1.0;
        bool diverged = false;
        for (int it = 1; it <= cfg.max_iterations; ++it) {
            State fx;
            try {
                fx = map(x);
            } catch (const singularity_error&) {
                // A singular configuration reached by a runaway iterate is a
                // divergence symptom; at the initial guess it is genuine.
                if (it == 1) throw;
                diverged = true;
                break;
            }
            const double r = dist(fx, x);
            last_residual = r;
            if (!std::isfinite(r)) { diverged = true; break; }
            if (first_residual < 0.0) first_residual = r;
            if (r < cfg.tolerance) {
                if (stats) { stats->iterations = it; stats->residual = r; stats->damping = omega; }
                return fx;
            }
            if (r > 100.0 * (first_residual + cfg.tolerance)) { diverged = true; break; }
            if (omega == 1.0) {
                x = std::move(fx);
            } else {
                x = blend(x, fx, omega);
            }
        }
        // Ran the full budget without diverging: more damping only slows the
        // iteration down, so give up now.
        if (!diverged) break;
    }
    (void)attempts_run;
    throw convergence_error("fixed-point iteration did not converge (last residual " +
                                std::to_string(last_residual) + ")",
                            last_residual, cfg.max_iterations);
}

}  // namespace pvort
