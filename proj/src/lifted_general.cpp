#include "pvort/lifted_general.hpp"

#include <cmath>

#include "pvort/errors.hpp"
#include "pvort/statevec.hpp"

namespace pvort {

namespace {

// Solve the 3x3 system J dx = -f by Gaussian elimination with partial
// pivoting; returns false on a (numerically) singular matrix.
bool solve3(double J[3][3], const Vec3& f, Vec3& dx) {
    double A[3][4] = {{J[0][0], J[0][1], J[0][2], -f.x},
                      {J[1][0], J[1][1], J[1][2], -f.y},
                      {J[2][0], J[2][1], J[2][2], -f.z}};
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        if (std::abs(A[piv][c]) < 1e-300) return false;
        if (piv != c)
            for (int j = 0; j < 4; ++j) std::swap(A[c][j], A[piv][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            const double m = A[r][c] / A[c][c];
            for (int j = c; j < 4; ++j) A[r][j] -= m * A[c][j];
        }
    }
    dx = {A[0][3] / A[0][0], A[1][3] / A[1][1], A[2][3] / A[2][2]};
    return true;
}

}  // namespace

SlackVector compute_slack(const LiftedState& prev, const LiftedState& curr, double h,
                          const LiftedHamiltonian& H) {
    const std::size_t n = curr.size();
    LiftedState mid = curr;
    for (std::size_t k = 0; k < n; ++k) mid.pairs[k] = 0.5 * (prev.pairs[k] + curr.pairs[k]);
    const std::vector<ComplexPair> g = H.grad(mid);
    SlackVector d(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex migamma(0.0, -curr.strengths[k]);
        const ComplexPair w =
            migamma * (curr.pairs[k] - prev.pairs[k]) + (h / 2.0) * g[k];
        d[k] = su2_pairing(curr.pairs[k], w);
    }
    return d;
}

StepRecord<std::vector<AlgebraVector>> solve_update_vector(const LiftedState& curr,
                                                           const SlackVector& slack, double h,
                                                           const LiftedHamiltonian& H,
                                                           const SolverConfig& cfg) {
    const std::size_t n = curr.size();
    std::vector<Vec3> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = hopf_project(curr.pairs[k]);

    // The projected equations also carry a spurious phase-neutral solution
    // branch (zero phase advance, nonzero multiplier) near a = 0.  Seeding
    // the axial component with the midpoint phase-advance estimate
    // -(h/4 Gamma) Re<phi, D_{phi^dag}H> puts the solve in the basin of the
    // midpoint branch.
    std::vector<AlgebraVector> a(n, AlgebraVector{});
    {
        const std::vector<ComplexPair> g0 = H.grad(curr);
        for (std::size_t k = 0; k < n; ++k)
            a[k] = (-h / (4.0 * curr.strengths[k]) *
                    hermitian_inner(curr.pairs[k], g0[k]).real()) *
                   x[k];
    }
    LiftedState mid = curr;
    auto update_mid = [&](std::size_t k) {
        mid.pairs[k] = 0.5 * (curr.pairs[k] + cayley(a[k]).apply(curr.pairs[k]));
    };
    for (std::size_t k = 0; k < n; ++k) update_mid(k);

    // Residual of vortex k's equation at the current sweep state, times
    // (1+|a|^2):  -2 Gamma (a x x + |a|^2 x) + (h/2)(1+|a|^2) t + (1+|a|^2) d,
    // t_a = Re[phi^dag (i sigma_a) D_{phi^dag}H(mid)].
    auto residual = [&](std::size_t k) {
        const ComplexPair gk = H.grad_one(mid, k);
        const Vec3 t = su2_pairing(curr.pairs[k], gk);
        const double n2 = norm2(a[k]);
        return -2.0 * curr.strengths[k] * (cross(a[k], x[k]) + n2 * x[k]) +
               (1.0 + n2) * ((h / 2.0) * t + slack[k]);
    };

    double residual_norm = 0.0;
    for (int sweep = 1; sweep <= cfg.max_iterations; ++sweep) {
        double max_update = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const Vec3 f0 = residual(k);
            // forward-difference 3x3 Jacobian in a_k
            double J[3][3];
            const double fd = 1e-7;
            const Vec3 saved = a[k];
            for (int c = 0; c < 3; ++c) {
                a[k] = saved;
                (c == 0 ? a[k].x : c == 1 ? a[k].y : a[k].z) += fd;
                update_mid(k);
                const Vec3 fc = residual(k);
                J[0][c] = (fc.x - f0.x) / fd;
                J[1][c] = (fc.y - f0.y) / fd;
                J[2][c] = (fc.z - f0.z) / fd;
            }
            a[k] = saved;
            Vec3 delta;
            if (!solve3(J, f0, delta))
                throw convergence_error("update-vector solve: singular Jacobian", max_abs(f0),
                                        sweep);
            // keep the Cayley parameter in its small-step regime
            const double step = max_abs(delta);
            if (step > 0.5) delta = (0.5 / step) * delta;
            a[k] += delta;
            update_mid(k);
            max_update = std::max(max_update, max_abs(delta));
        }
        if (max_update < cfg.tolerance) {
            double worst = 0.0;
            for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, max_abs(residual(k)));
            residual_norm = worst;
            return {std::move(a), sweep, residual_norm};
        }
        residual_norm = max_update;
    }
    throw convergence_error("update-vector solve: no convergence (last update " +
                                std::to_string(residual_norm) + ")",
                            residual_norm, cfg.max_iterations);
}

StepRecord<LiftedState> step_general(const LiftedState& prev, const LiftedState& curr, double h,
                                     const LiftedHamiltonian& H, const SolverConfig& cfg) {
    const SlackVector d = compute_slack(prev, curr, h, H);
    StepRecord<std::vector<AlgebraVector>> a = solve_update_vector(curr, d, h, H, cfg);
    LiftedState next = curr;
    for (std::size_t k = 0; k < curr.size(); ++k)
        next.pairs[k] = cayley(a.state[k]).apply(curr.pairs[k]);
    return {std::move(next), a.iterations, a.residual};
}

StepRecord<LiftedState> step_general(const LiftedState& prev, const LiftedState& curr, double h,
                                     Regularization reg, const SolverConfig& cfg) {
    return step_general(prev, curr, h, VortexHamiltonian(reg), cfg);
}

}  // namespace pvort
