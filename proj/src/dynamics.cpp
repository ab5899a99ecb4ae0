#include "pvort/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pvort/errors.hpp"

namespace pvort {

namespace {

constexpr double kFourPi = 4.0 * M_PI;
constexpr double kDenomFloor = 1e-14;

[[noreturn]] void throw_pair(const char* what, std::size_t i, std::size_t j) {
    throw singularity_error(std::string(what) + " for vortex pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
}

// |<phi_i,phi_j>|^2 clamped to [0,1]; round-off can push nearly identical
// fibers slightly above 1, which would flip the sign of the log argument.
double clamped_overlap(const ComplexPair& a, const ComplexPair& b) {
    return std::clamp(std::norm(hermitian_inner(a, b)), 0.0, 1.0);
}

}  // namespace

void SphereState::validate(double tol) const {
    if (strengths.size() != positions.size() || strengths.empty())
        throw config_error("SphereState: strengths/positions size mismatch or empty");
    for (const Vec3& x : positions)
        if (std::abs(norm(x) - 1.0) > tol)
            throw config_error("SphereState: position is not on the unit sphere");
}

void LiftedState::validate(double tol) const {
    if (strengths.size() != pairs.size() || strengths.empty())
        throw config_error("LiftedState: strengths/pairs size mismatch or empty");
    for (const ComplexPair& p : pairs)
        if (std::abs(norm(p) - 1.0) > tol)
            throw config_error("LiftedState: pair is not unit length");
}

LiftedState lift_state(const SphereState& s) {
    LiftedState out;
    out.strengths = s.strengths;
    out.pairs.reserve(s.size());
    for (const Vec3& x : s.positions) out.pairs.push_back(hopf_lift(x));
    return out;
}

SphereState project_state(const LiftedState& s) {
    SphereState out;
    out.strengths = s.strengths;
    out.positions.reserve(s.size());
    for (const ComplexPair& p : s.pairs) out.positions.push_back(hopf_project(p));
    return out;
}

double energy_sphere(const SphereState& s, Regularization reg) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    std::vector<double> row(n, 0.0);
    std::ptrdiff_t bad_i = -1, bad_j = -1;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            const double arg = sig2 + norm2(s.positions[i] - s.positions[j]);
            if (arg <= 0.0) {
#pragma omp critical
                if (bad_i < 0) { bad_i = i; bad_j = j; }
                continue;
            }
            acc += s.strengths[i] * s.strengths[j] * std::log(arg);
        }
        row[i] = acc;
    }
    if (bad_i >= 0) throw_pair("coincident vortices", bad_i, bad_j);
    double total = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) total += row[i];
    return -total / kFourPi;
}

std::vector<Vec3> grad_energy_sphere(const SphereState& s, Regularization reg) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    std::vector<Vec3> out(n);
    std::ptrdiff_t bad_i = -1, bad_j = -1;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        Vec3 acc{};
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Vec3 d = s.positions[i] - s.positions[j];
            const double arg = sig2 + norm2(d);
            if (arg <= 0.0) {
#pragma omp critical
                if (bad_i < 0) { bad_i = std::min(i, j); bad_j = std::max(i, j); }
                continue;
            }
            acc += (s.strengths[j] / arg) * d;
        }
        out[i] = (-2.0 * s.strengths[i] / kFourPi) * acc;
    }
    if (bad_i >= 0) throw_pair("coincident vortices", bad_i, bad_j);
    return out;
}

std::vector<Vec3> vector_field(const SphereState& s, Regularization reg) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
    const double sig2 = reg.sigma * reg.sigma;
    std::vector<Vec3> out(n);
    std::ptrdiff_t bad_i = -1, bad_j = -1;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        Vec3 acc{};
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const double den = 1.0 + sig2 - dot(s.positions[k], s.positions[j]);
            if (den < kDenomFloor) {
#pragma omp critical
                if (bad_i < 0) { bad_i = std::min(j, k); bad_j = std::max(j, k); }
                continue;
            }
            acc += (s.strengths[j] / den) * cross(s.positions[j], s.positions[k]);
        }
        out[k] = (1.0 / kFourPi) * acc;
    }
    if (bad_i >= 0) throw_pair("vanishing denominator", bad_i, bad_j);
    return out;
}

double energy_lifted(const LiftedState& s, Regularization reg) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    std::vector<double> row(n, 0.0);
    std::ptrdiff_t bad_i = -1, bad_j = -1;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            const double arg = sig2 + 4.0 * (1.0 - clamped_overlap(s.pairs[i], s.pairs[j]));
            if (arg <= 0.0) {
#pragma omp critical
                if (bad_i < 0) { bad_i = i; bad_j = j; }
                continue;
            }
            acc += s.strengths[i] * s.strengths[j] * std::log(arg);
        }
        row[i] = acc;
    }
    if (bad_i >= 0) throw_pair("coincident fibers", bad_i, bad_j);
    double total = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) total += row[i];
    return -total / kFourPi;
}

std::vector<ComplexPair> grad_energy_lifted(const LiftedState& s, Regularization reg) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    std::vector<ComplexPair> out(n);
    std::ptrdiff_t bad_i = -1, bad_j = -1;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        ComplexPair acc{};
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double arg = sig2 + 4.0 * (1.0 - clamped_overlap(s.pairs[i], s.pairs[j]));
            if (arg <= 0.0) {
#pragma omp critical
                if (bad_i < 0) { bad_i = std::min(i, j); bad_j = std::max(i, j); }
                continue;
            }
            const Complex w = hermitian_inner(s.pairs[j], s.pairs[i]);
            acc += (s.strengths[i] * s.strengths[j] / arg * w) * s.pairs[j];
        }
        out[i] = (1.0 / M_PI) * acc;
    }
    if (bad_i >= 0) throw_pair("coincident fibers", bad_i, bad_j);
    return out;
}

ComplexPair grad_energy_lifted_one(const LiftedState& s, Regularization reg, std::size_t i) {
    const std::size_t n = s.size();
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    ComplexPair acc{};
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double arg = sig2 + 4.0 * (1.0 - clamped_overlap(s.pairs[i], s.pairs[j]));
        if (arg <= 0.0) throw_pair("coincident fibers", std::min(i, j), std::max(i, j));
        const Complex w = hermitian_inner(s.pairs[j], s.pairs[i]);
        acc += (s.strengths[i] * s.strengths[j] / arg * w) * s.pairs[j];
    }
    return (1.0 / M_PI) * acc;
}

Vec3 vortex_moment(const SphereState& s) {
    Vec3 m{};
    for (std::size_t i = 0; i < s.size(); ++i) m += s.strengths[i] * s.positions[i];
    return m;
}

namespace ref {

double energy_sphere(const SphereState& s, Regularization reg) {
    const std::size_t n = s.size();
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double arg = sig2 + norm2(s.positions[i] - s.positions[j]);
            if (arg <= 0.0) throw_pair("coincident vortices", i, j);
            total += s.strengths[i] * s.strengths[j] * std::log(arg);
        }
    return -total / kFourPi;
}

std::vector<Vec3> grad_energy_sphere(const SphereState& s, Regularization reg) {
    const std::size_t n = s.size();
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    std::vector<Vec3> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec3 acc{};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Vec3 d = s.positions[i] - s.positions[j];
            const double arg = sig2 + norm2(d);
            if (arg <= 0.0) throw_pair("coincident vortices", std::min(i, j), std::max(i, j));
            acc += (s.strengths[j] / arg) * d;
        }
        out[i] = (-2.0 * s.strengths[i] / kFourPi) * acc;
    }
    return out;
}

std::vector<Vec3> vector_field(const SphereState& s, Regularization reg) {
    const std::size_t n = s.size();
    const double sig2 = reg.sigma * reg.sigma;
    std::vector<Vec3> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec3 acc{};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const double den = 1.0 + sig2 - dot(s.positions[k], s.positions[j]);
            if (den < kDenomFloor)
                throw_pair("vanishing denominator", std::min(j, k), std::max(j, k));
            acc += (s.strengths[j] / den) * cross(s.positions[j], s.positions[k]);
        }
        out[k] = (1.0 / kFourPi) * acc;
    }
    return out;
}

double energy_lifted(const LiftedState& s, Regularization reg) {
    const std::size_t n = s.size();
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double arg = sig2 + 4.0 * (1.0 - clamped_overlap(s.pairs[i], s.pairs[j]));
            if (arg <= 0.0) throw_pair("coincident fibers", i, j);
            total += s.strengths[i] * s.strengths[j] * std::log(arg);
        }
    return -total / kFourPi;
}

std::vector<ComplexPair> grad_energy_lifted(const LiftedState& s, Regularization reg) {
    const std::size_t n = s.size();
    const double sig2 = 2.0 * reg.sigma * reg.sigma;
    std::vector<ComplexPair> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        ComplexPair acc{};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double arg = sig2 + 4.0 * (1.0 - clamped_overlap(s.pairs[i], s.pairs[j]));
            if (arg <= 0.0) throw_pair("coincident fibers", std::min(i, j), std::max(i, j));
            const Complex w = hermitian_inner(s.pairs[j], s.pairs[i]);
            acc += (s.strengths[i] * s.strengths[j] / arg * w) * s.pairs[j];
        }
        out[i] = (1.0 / M_PI) * acc;
    }
    return out;
}

}  // namespace ref

}  // namespace pvort
