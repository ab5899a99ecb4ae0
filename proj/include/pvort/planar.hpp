#pragma once

#include <complex>
#include <vector>

#include "pvort/integrators.hpp"
#include "pvort/solver.hpp"
#include "pvort/state.hpp"

namespace pvort {

/// Planar interaction energy -(1/4pi) sum_{a<b} Gamma_a Gamma_b log|z_a - z_b|^2.
double planar_energy(const PlanarState& s);

/// Planar vortex velocities, Gamma_a z_a' = -2i dH/dz_a^*, i.e.
///   z_a' = (i/2pi) sum_{b!=a} Gamma_b / (z_a^* - z_b^*).
std::vector<std::complex<double>> planar_rhs(const PlanarState& s);

/// Two-step family with interpolation parameter alpha in [0,1]:
///   (z^{n+2} - z^n)/(2h) = alpha f(z^{n+alpha}) + (1-alpha) f(z^{n+1+alpha}),
///   z^{n+alpha} = (1-alpha) z^n + alpha z^{n+1}.
/// Explicit for alpha in {0,1} (the symmetric explicit midpoint method, which
/// carries parasitic modes); implicit otherwise.
StepRecord<PlanarState> step_alpha(const PlanarState& prev, const PlanarState& curr, double alpha,
                                   double h, const SolverConfig& cfg);

/// Implicit midpoint step (z' - z)/h = f((z + z')/2).
StepRecord<PlanarState> step_midpoint_plane(const PlanarState& s, double h,
                                            const SolverConfig& cfg);

}  // namespace pvort
