#include "pvort/integrators.hpp"

#include <cmath>

#include "pvort/errors.hpp"
#include "pvort/statevec.hpp"

namespace pvort {

namespace {

std::vector<Vec3> normalized_all(std::vector<Vec3> xs) {
    for (Vec3& x : xs) x = normalized(x);
    return xs;
}

}  // namespace

StepRecord<LiftedState> step_hopf(const LiftedState& s, double h, Regularization reg,
                                  const SolverConfig& cfg) {
    if (h == 0.0) return {s, 0, 0.0};
    const std::size_t n = s.size();
    LiftedState mid = s;
    auto map = [&](const std::vector<ComplexPair>& next) {
        for (std::size_t k = 0; k < n; ++k) mid.pairs[k] = 0.5 * (s.pairs[k] + next[k]);
        const std::vector<ComplexPair> g = grad_energy_lifted(mid, reg);
        std::vector<ComplexPair> out(n);
        for (std::size_t k = 0; k < n; ++k)
            out[k] = s.pairs[k] + Complex(0.0, -h / (2.0 * s.strengths[k])) * g[k];
        return out;
    };
    SolveStats stats;
    std::vector<ComplexPair> next = solve_fixed_point(
        map, s.pairs, cfg, [](const auto& a, const auto& b) { return max_update_norm(a, b); },
        &stats);
    return {LiftedState{s.strengths, std::move(next)}, stats.iterations, stats.residual};
}

StepRecord<SphereState> step_midpoint_s2(const SphereState& s, double h, Regularization reg,
                                         const SolverConfig& cfg) {
    if (h == 0.0) return {s, 0, 0.0};
    const std::size_t n = s.size();
    SphereState mid = s;
    auto map = [&](const std::vector<Vec3>& next) {
        for (std::size_t k = 0; k < n; ++k) mid.positions[k] = 0.5 * (s.positions[k] + next[k]);
        const std::vector<Vec3> v = vector_field(mid, reg);
        std::vector<Vec3> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = s.positions[k] + h * v[k];
        return out;
    };
    SolveStats stats;
    std::vector<Vec3> next = solve_fixed_point(
        map, s.positions, cfg, [](const auto& a, const auto& b) { return max_update_norm(a, b); },
        &stats);
    return {SphereState{s.strengths, std::move(next)}, stats.iterations, stats.residual};
}

SphereState step_rk4_projected(const SphereState& s, double h, Regularization reg) {
    const std::size_t n = s.size();
    SphereState stage = s;
    auto eval = [&](const std::vector<Vec3>& base, const std::vector<Vec3>& k, double c) {
        for (std::size_t i = 0; i < n; ++i) stage.positions[i] = base[i] + c * k[i];
        return vector_field(stage, reg);
    };
    const std::vector<Vec3> k1 = vector_field(s, reg);
    const std::vector<Vec3> k2 = eval(s.positions, k1, h / 2.0);
    const std::vector<Vec3> k3 = eval(s.positions, k2, h / 2.0);
    const std::vector<Vec3> k4 = eval(s.positions, k3, h);
    std::vector<Vec3> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = s.positions[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return {s.strengths, normalized_all(std::move(out))};
}

SphereState step_rk2_projected(const SphereState& s, double h, Regularization reg) {
    const std::size_t n = s.size();
    const std::vector<Vec3> k1 = vector_field(s, reg);
    SphereState stage = s;
    for (std::size_t i = 0; i < n; ++i) stage.positions[i] = s.positions[i] + h * k1[i];
    const std::vector<Vec3> k2 = vector_field(stage, reg);
    std::vector<Vec3> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = s.positions[i] + (h / 2.0) * (k1[i] + k2[i]);
    return {s.strengths, normalized_all(std::move(out))};
}

StepRecord<SphereState> step_lie_poisson(const SphereState& s, double h, Regularization reg,
                                         const SolverConfig& cfg) {
    if (h == 0.0) return {s, 0, 0.0};
    const std::size_t n = s.size();
    const std::vector<Vec3> g0 = grad_energy_sphere(s, reg);
    SphereState trial = s;
    auto map = [&](const std::vector<Vec3>& next) {
        trial.positions = next;
        const std::vector<Vec3> g1 = grad_energy_sphere(trial, reg);
        std::vector<Vec3> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Vec3 xi = (h / (2.0 * s.strengths[k])) * (g0[k] + g1[k]);
            out[k] = rotate_by(xi, s.positions[k]);
        }
        return out;
    };
    SolveStats stats;
    std::vector<Vec3> next = solve_fixed_point(
        map, s.positions, cfg, [](const auto& a, const auto& b) { return max_update_norm(a, b); },
        &stats);
    return {SphereState{s.strengths, std::move(next)}, stats.iterations, stats.residual};
}

StepRecord<LiftedState> step_trapezoid_twostep(const LiftedState& prev, const LiftedState& curr,
                                               double h, Regularization reg,
                                               const SolverConfig& cfg) {
    const std::size_t n = curr.size();
    const std::vector<ComplexPair> g = grad_energy_lifted(curr, reg);
    std::vector<ComplexPair> next(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex ihg(0.0, h / curr.strengths[k]);
        // phi' = c + lambda d with c = phi^{n-1} - (ih/Gamma) g, d = (ih/Gamma) phi^n
        const ComplexPair c = prev.pairs[k] - ihg * g[k];
        const ComplexPair d = ihg * curr.pairs[k];
        const double qa = norm2(d);
        const double qb = 2.0 * hermitian_inner(d, c).real();
        const double qc = norm2(c) - 1.0;
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0)
            throw step_error("trapezoid step: no real unit-length multiplier for vortex " +
                             std::to_string(k));
        // Smallest-magnitude real root; it is the one vanishing as h -> 0.
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (qb + (qb >= 0.0 ? sq : -sq));
        double lambda;
        if (qc == 0.0) {
            lambda = 0.0;
        } else if (q == 0.0) {
            lambda = -qb / (2.0 * qa);
        } else {
            const double r1 = q / qa, r2 = qc / q;
            lambda = std::abs(r1) <= std::abs(r2) ? r1 : r2;
        }
        next[k] = c + lambda * d;
    }
    (void)cfg;
    return {LiftedState{curr.strengths, std::move(next)}, 0, 0.0};
}

}  // namespace pvort
