#pragma once

#include <vector>

#include "pvort/state.hpp"

namespace pvort {

// Pairwise O(N^2) kernels for the vortex Hamiltonian
//
//   H = -(1/4pi) sum_{i<j} Gamma_i Gamma_j log(2 sigma^2 + |x_i - x_j|^2)
//
// and its lift through the Hopf map.  The default entry points parallelize
// the outer loop with OpenMP; pair sums are accumulated per row in ascending
// j and the rows are merged in ascending i, so results are bit-identical for
// any thread count.  pvort::ref holds plain serial loops kept as a reference
// for the tests and the kernel benchmark.

/// Interaction energy of a spherical state.
double energy_sphere(const SphereState& s, Regularization reg);

/// Ambient-space gradient of energy_sphere with respect to each position.
std::vector<Vec3> grad_energy_sphere(const SphereState& s, Regularization reg);

/// Velocities x_k' = (1/4pi) sum_{j!=k} Gamma_j (x_j x x_k) / (1 + sigma^2 - x_k.x_j).
std::vector<Vec3> vector_field(const SphereState& s, Regularization reg);

/// Lifted energy -(1/4pi) sum_{i<j} Gamma_i Gamma_j log[2 sigma^2 + 4(1 - |<phi_i,phi_j>|^2)].
double energy_lifted(const LiftedState& s, Regularization reg);

/// Derivative of energy_lifted with respect to the conjugate pairs,
/// D_{phi_i^dag} H = (1/pi) sum_{j!=i} Gamma_i Gamma_j phi_j <phi_j, phi_i> / arg_ij.
std::vector<ComplexPair> grad_energy_lifted(const LiftedState& s, Regularization reg);

/// Single row of grad_energy_lifted (an O(N) evaluation for solvers that
/// refine one vortex at a time).
ComplexPair grad_energy_lifted_one(const LiftedState& s, Regularization reg, std::size_t i);

/// Vortex moment M = sum_i Gamma_i x_i.
Vec3 vortex_moment(const SphereState& s);

namespace ref {
double energy_sphere(const SphereState& s, Regularization reg);
std::vector<Vec3> grad_energy_sphere(const SphereState& s, Regularization reg);
std::vector<Vec3> vector_field(const SphereState& s, Regularization reg);
double energy_lifted(const LiftedState& s, Regularization reg);
std::vector<ComplexPair> grad_energy_lifted(const LiftedState& s, Regularization reg);
}  // namespace ref

}  // namespace pvort
