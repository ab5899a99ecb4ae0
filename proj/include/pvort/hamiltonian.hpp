#pragma once

#include <vector>

#include "pvort/dynamics.hpp"
#include "pvort/state.hpp"

namespace pvort {

/// Hamiltonian on the product of 3-spheres, seen through its value and its
/// derivative with respect to the conjugate pairs.  Both are evaluated on
/// ambient (not necessarily unit) pairs, which is what midpoint-style
/// discretizations feed them.
class LiftedHamiltonian {
public:
    virtual ~LiftedHamiltonian() = default;

    virtual double energy(const LiftedState& s) const = 0;

    /// D_{phi_i^dag} H (column pairs), phi and phi^dag treated independently.
    virtual std::vector<ComplexPair> grad(const LiftedState& s) const = 0;

    /// Row i of grad(); override when a single row is cheaper than all N.
    virtual ComplexPair grad_one(const LiftedState& s, std::size_t i) const {
        return grad(s)[i];
    }
};

/// The vortex interaction Hamiltonian, phase-invariant in every argument.
class VortexHamiltonian final : public LiftedHamiltonian {
public:
    explicit VortexHamiltonian(Regularization reg) : reg_(reg) {}

    double energy(const LiftedState& s) const override { return energy_lifted(s, reg_); }
    std::vector<ComplexPair> grad(const LiftedState& s) const override {
        return grad_energy_lifted(s, reg_);
    }
    ComplexPair grad_one(const LiftedState& s, std::size_t i) const override {
        return grad_energy_lifted_one(s, reg_, i);
    }

private:
    Regularization reg_;
};

}  // namespace pvort
