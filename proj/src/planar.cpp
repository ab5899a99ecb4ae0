#include "pvort/planar.hpp"

#include <cmath>
#include <string>

#include "pvort/errors.hpp"
#include "pvort/statevec.hpp"

namespace pvort {

namespace {
constexpr double kFourPi = 4.0 * M_PI;
using Cx = std::complex<double>;
}  // namespace

double planar_energy(const PlanarState& s) {
    const std::size_t n = s.size();
    double total = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double r2 = std::norm(s.positions[a] - s.positions[b]);
            if (r2 <= 0.0)
                throw singularity_error("coincident vortices for vortex pair (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
            total += s.strengths[a] * s.strengths[b] * std::log(r2);
        }
    return -total / kFourPi;
}

std::vector<Cx> planar_rhs(const PlanarState& s) {
    const std::size_t n = s.size();
    std::vector<Cx> out(n);
    for (std::size_t a = 0; a < n; ++a) {
        Cx acc = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a) continue;
            const Cx dz = std::conj(s.positions[a] - s.positions[b]);
            if (std::norm(dz) == 0.0)
                throw singularity_error("coincident vortices for vortex pair (" +
                                        std::to_string(std::min(a, b)) + "," +
                                        std::to_string(std::max(a, b)) + ")");
            acc += s.strengths[b] / dz;
        }
        out[a] = Cx(0.0, 1.0 / (2.0 * M_PI)) * acc;
    }
    return out;
}

StepRecord<PlanarState> step_alpha(const PlanarState& prev, const PlanarState& curr, double alpha,
                                   double h, const SolverConfig& cfg) {
    const std::size_t n = curr.size();
    PlanarState stage = curr;
    if (alpha == 0.0 || alpha == 1.0) {
        const std::vector<Cx> f = planar_rhs(curr);
        std::vector<Cx> next(n);
        for (std::size_t a = 0; a < n; ++a) next[a] = prev.positions[a] + 2.0 * h * f[a];
        return {PlanarState{curr.strengths, std::move(next)}, 0, 0.0};
    }
    std::vector<Cx> fa(n);
    {
        for (std::size_t a = 0; a < n; ++a)
            stage.positions[a] = (1.0 - alpha) * prev.positions[a] + alpha * curr.positions[a];
        fa = planar_rhs(stage);
    }
    auto map = [&](const std::vector<Cx>& next) {
        for (std::size_t a = 0; a < n; ++a)
            stage.positions[a] = (1.0 - alpha) * curr.positions[a] + alpha * next[a];
        const std::vector<Cx> fb = planar_rhs(stage);
        std::vector<Cx> out(n);
        for (std::size_t a = 0; a < n; ++a)
            out[a] = prev.positions[a] + 2.0 * h * (alpha * fa[a] + (1.0 - alpha) * fb[a]);
        return out;
    };
    SolveStats stats;
    std::vector<Cx> next = solve_fixed_point(
        map, curr.positions, cfg, [](const auto& a, const auto& b) { return max_update_norm(a, b); },
        &stats);
    return {PlanarState{curr.strengths, std::move(next)}, stats.iterations, stats.residual};
}

StepRecord<PlanarState> step_midpoint_plane(const PlanarState& s, double h,
                                            const SolverConfig& cfg) {
    if (h == 0.0) return {s, 0, 0.0};
    const std::size_t n = s.size();
    PlanarState mid = s;
    auto map = [&](const std::vector<Cx>& next) {
        for (std::size_t a = 0; a < n; ++a)
            mid.positions[a] = 0.5 * (s.positions[a] + next[a]);
        const std::vector<Cx> f = planar_rhs(mid);
        std::vector<Cx> out(n);
        for (std::size_t a = 0; a < n; ++a) out[a] = s.positions[a] + h * f[a];
        return out;
    };
    SolveStats stats;
    std::vector<Cx> next = solve_fixed_point(
        map, s.positions, cfg, [](const auto& a, const auto& b) { return max_update_norm(a, b); },
        &stats);
    return {PlanarState{s.strengths, std::move(next)}, stats.iterations, stats.residual};
}

}  // namespace pvort
