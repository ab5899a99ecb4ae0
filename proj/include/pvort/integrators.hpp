#pragma once

#include "pvort/dynamics.hpp"
#include "pvort/solver.hpp"
#include "pvort/state.hpp"

namespace pvort {

/// Accepted state of an implicit step together with the solve record.
template <class State>
struct StepRecord {
    State state;
    int iterations = 0;
    double residual = 0.0;
};

/// Implicit midpoint step of the lifted system,
///   -i Gamma_k (phi_k' - phi_k) + (h/2) D_{phi_k^dag} H((phi + phi')/2) = 0.
/// Length-preserving without projection; conserves the vortex moment exactly.
StepRecord<LiftedState> step_hopf(const LiftedState& s, double h, Regularization reg,
                                  const SolverConfig& cfg);

/// Implicit midpoint step of the vortex equations on the 2-sphere; the
/// gradient is evaluated at the chord midpoint (x + x')/2.  Length-preserving
/// for this vector field without projection.
StepRecord<SphereState> step_midpoint_s2(const SphereState& s, double h, Regularization reg,
                                         const SolverConfig& cfg);

/// Classical RK4 in the ambient space, positions normalized once at the end
/// of the step.
SphereState step_rk4_projected(const SphereState& s, double h, Regularization reg);

/// Heun's method in the ambient space, normalized once at the end of the step.
SphereState step_rk2_projected(const SphereState& s, double h, Regularization reg);

/// Self-consistent per-vortex rotation x_k' = R(xi_k) x_k with trapezoidal
/// rotation vector xi_k = h/(2 Gamma_k) (grad_k H(x) + grad_k H(x')).
StepRecord<SphereState> step_lie_poisson(const SphereState& s, double h, Regularization reg,
                                         const SolverConfig& cfg);

/// Explicit two-step trapezoid variant of the lifted scheme,
///   -i Gamma_k (phi_k^{n+1} - phi_k^{n-1}) + h D_{phi_k^dag} H(phi^n)
///     = h lambda_k phi_k^n,
/// with the real multiplier lambda_k enforcing unit length (smallest-magnitude
/// root).  Exhibits the parasitic growth typical of two-step schemes.
StepRecord<LiftedState> step_trapezoid_twostep(const LiftedState& prev, const LiftedState& curr,
                                               double h, Regularization reg,
                                               const SolverConfig& cfg);

}  // namespace pvort
