#pragma once

#include <vector>

#include "pvort/hamiltonian.hpp"
#include "pvort/integrators.hpp"
#include "pvort/solver.hpp"
#include "pvort/state.hpp"

namespace pvort {

/// Per-vortex slack 3-vectors of the two-step discrete equations.
using SlackVector = std::vector<Vec3>;

/// Slack of a consecutive pair of states,
///   d_a = Re[ phi^n_dag (i sigma_a) ( -i Gamma (phi^n - phi^{n-1})
///                                     + (h/2) D_{phi^dag} H(phi^{n-1/2}) ) ],
/// with phi^{n-1/2} = (phi^{n-1} + phi^n)/2.  Vanishes along midpoint
/// trajectories of phase-invariant Hamiltonians.
SlackVector compute_slack(const LiftedState& prev, const LiftedState& curr, double h,
                          const LiftedHamiltonian& H);

/// Solve the update equation for the per-vortex su(2) vectors a,
///   -2 Gamma (a x x + |a|^2 x)
///     + (h/2) ( x x grad - (a.x) grad - (a x x) x grad )
///     = -(1+|a|^2) d,
/// where x = pi(phi^n), with the Hamiltonian term evaluated in its exact
/// su(2)-pairing form (h/2)(1+|a|^2) Re[phi^dag (i sigma_a) D_{phi^dag}H] at
/// the midpoint (phi^n + Cay(a) phi^n)/2.  The bracketed form above equals
/// the pairing when the midpoint lies on the sphere; using the pairing
/// directly is what keeps this scheme exactly equivalent to the implicit
/// midpoint method for phase-invariant Hamiltonians, and it needs no
/// projected-gradient accessor for phase-dependent ones.
///
/// The flat 3N system is solved by damped Newton sweeps (one 3x3
/// finite-difference Newton update per vortex per sweep) from a = 0; the
/// equation determines the axial component of a only at O(h), which rules
/// out plain fixed-point iteration.
StepRecord<std::vector<AlgebraVector>> solve_update_vector(const LiftedState& curr,
                                                           const SlackVector& slack, double h,
                                                           const LiftedHamiltonian& H,
                                                           const SolverConfig& cfg);

/// One step of the two-step scheme: slack from (prev, curr), update vectors
/// from the nonlinear equation, then phi^{n+1} = Cay(a) phi^n.  The group
/// update keeps every pair length exactly.
StepRecord<LiftedState> step_general(const LiftedState& prev, const LiftedState& curr, double h,
                                     const LiftedHamiltonian& H, const SolverConfig& cfg);

/// Convenience overload for the vortex Hamiltonian.
StepRecord<LiftedState> step_general(const LiftedState& prev, const LiftedState& curr, double h,
                                     Regularization reg, const SolverConfig& cfg);

}  // namespace pvort
