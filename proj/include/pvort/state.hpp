#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "pvort/su2.hpp"
#include "pvort/vec3.hpp"

namespace pvort {

/// Pairwise cutoff sigma >= 0; sigma = 0 is the unregularized system.
struct Regularization {
    double sigma = 0.0;
};

/// N vortices on the unit sphere: strengths Gamma_i and positions x_i.
/// Kernels accept ambient (non-unit) positions; validate() checks the
/// on-sphere representation.
struct SphereState {
    std::vector<double> strengths;
    std::vector<Vec3> positions;

    std::size_t size() const { return strengths.size(); }
    void validate(double tol = 1e-10) const;
};

/// N vortices lifted to the 3-sphere: strengths Gamma_i and unit pairs phi_i.
struct LiftedState {
    std::vector<double> strengths;
    std::vector<ComplexPair> pairs;

    std::size_t size() const { return strengths.size(); }
    void validate(double tol = 1e-10) const;
};

/// N planar vortices: strengths Gamma_i and complex positions z_i.
struct PlanarState {
    std::vector<double> strengths;
    std::vector<std::complex<double>> positions;

    std::size_t size() const { return strengths.size(); }
};

/// Lift every position through a local section of the Hopf fibration.
LiftedState lift_state(const SphereState& s);

/// Project every pair through the Hopf map.
SphereState project_state(const LiftedState& s);

}  // namespace pvort
