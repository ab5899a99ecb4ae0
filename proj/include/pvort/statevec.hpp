#pragma once

#include <complex>
#include <vector>

#include "pvort/su2.hpp"
#include "pvort/vec3.hpp"

namespace pvort {

// Max-norm distances and relaxation blends for the flat state vectors the
// implicit solvers iterate on.

inline double max_update_norm(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_abs(a[i] - b[i]));
    return m;
}

inline double max_update_norm(const std::vector<ComplexPair>& a,
                              const std::vector<ComplexPair>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_abs(a[i] - b[i]));
    return m;
}

inline double max_update_norm(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

template <class T>
std::vector<T> blend(const std::vector<T>& x, const std::vector<T>& fx, double omega) {
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = (1.0 - omega) * x[i] + omega * fx[i];
    return out;
}

inline double blend(double x, double fx, double omega) { return (1.0 - omega) * x + omega * fx; }

}  // namespace pvort
