#pragma once

#include <complex>
#include <random>

#include "pvort/su2.hpp"
#include "pvort/vec3.hpp"

namespace pvort::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240915);
    return gen;
}

inline double randn() {
    static std::normal_distribution<double> dist(0.0, 1.0);
    return dist(rng());
}

inline double uniform(double a, double b) {
    return a + (b - a) * std::uniform_real_distribution<double>(0.0, 1.0)(rng());
}

inline Vec3 random_unit_vec3() {
    Vec3 v{randn(), randn(), randn()};
    return normalized(v);
}

inline ComplexPair random_unit_pair() {
    ComplexPair p{{randn(), randn()}, {randn(), randn()}};
    const double n = norm(p);
    return {p.z / n, p.u / n};
}

}  // namespace pvort::test
