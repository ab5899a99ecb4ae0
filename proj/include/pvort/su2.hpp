#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include "pvort/vec3.hpp"

namespace pvort {

using Complex = std::complex<double>;

/// Point of C^2, written phi = [z, u].  Unit pairs (|z|^2 + |u|^2 = 1)
/// represent points of the 3-sphere.
struct ComplexPair {
    Complex z{0.0, 0.0};
    Complex u{0.0, 0.0};

    ComplexPair& operator+=(const ComplexPair& o) { z += o.z; u += o.u; return *this; }
    ComplexPair& operator-=(const ComplexPair& o) { z -= o.z; u -= o.u; return *this; }
};

inline ComplexPair operator+(ComplexPair a, const ComplexPair& b) { return a += b; }
inline ComplexPair operator-(ComplexPair a, const ComplexPair& b) { return a -= b; }
inline ComplexPair operator*(Complex s, const ComplexPair& a) { return {s * a.z, s * a.u}; }
inline ComplexPair operator*(double s, const ComplexPair& a) { return {s * a.z, s * a.u}; }

inline double norm2(const ComplexPair& a) { return std::norm(a.z) + std::norm(a.u); }
inline double norm(const ComplexPair& a) { return std::sqrt(norm2(a)); }

inline double max_abs(const ComplexPair& a) { return std::max(std::abs(a.z), std::abs(a.u)); }

/// Hermitian inner product <phi, psi> = z1* z2 + u1* u2 (antilinear in phi).
inline Complex hermitian_inner(const ComplexPair& phi, const ComplexPair& psi) {
    return std::conj(phi.z) * psi.z + std::conj(phi.u) * psi.u;
}

/// Vector representation of an su(2) element A = sum_a v_a (i sigma_a).
using AlgebraVector = Vec3;

/// 2x2 complex matrix, row major: [[a, b], [c, d]].
struct Mat2c {
    Complex a, b, c, d;

    static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

    ComplexPair apply(const ComplexPair& p) const {
        return {a * p.z + b * p.u, c * p.z + d * p.u};
    }
    Mat2c operator*(const Mat2c& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2c dagger() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }
    Complex det() const { return a * d - b * c; }
};

/// Pauli matrices sigma_1, sigma_2, sigma_3.
inline const std::array<Mat2c, 3>& pauli_matrices() {
    static const std::array<Mat2c, 3> sigma = {{
        {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)},
        {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)},
        {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)},
    }};
    return sigma;
}

/// Hopf map phi -> (2 Re(z* u), 2 Im(z* u), |z|^2 - |u|^2).  Components equal
/// phi^dag sigma_a phi; unit input gives a unit 3-vector.
inline Vec3 hopf_project(const ComplexPair& phi) {
    if (norm2(phi) == 0.0) throw std::domain_error("hopf_project: zero input");
    const Complex w = std::conj(phi.z) * phi.u;
    return {2.0 * w.real(), 2.0 * w.imag(), std::norm(phi.z) - std::norm(phi.u)};
}

/// One section of the Hopf fibration: a unit pair with hopf_project(result) = x.
/// Uses the z-real branch z = sqrt((1+x3)/2), u = (x1+ix2)/(2z) away from the
/// south pole and the u-real branch below x3 = -1/2, so both stay conditioned.
inline ComplexPair hopf_lift(const Vec3& x) {
    if (std::abs(norm(x) - 1.0) > 1e-10)
        throw std::domain_error("hopf_lift: input is not a unit vector");
    if (x.z >= -0.5) {
        const double z = std::sqrt((1.0 + x.z) / 2.0);
        return {Complex(z, 0.0), Complex(x.x, x.y) / (2.0 * z)};
    }
    const double u = std::sqrt((1.0 - x.z) / 2.0);
    return {Complex(x.x, -x.y) / (2.0 * u), Complex(u, 0.0)};
}

/// (a . i sigma) phi, the action of the su(2) element with vector
/// representation a on a pair.
inline ComplexPair algebra_apply(const AlgebraVector& a, const ComplexPair& phi) {
    const Complex i(0.0, 1.0);
    return {i * a.z * phi.z + Complex(a.y, a.x) * phi.u,
            Complex(-a.y, a.x) * phi.z - i * a.z * phi.u};
}

/// Cayley transform Cay(A) = (I+A)(I-A)^{-1} of A = a . (i sigma), in the
/// closed form ((1-|a|^2) I + 2A) / (1+|a|^2).  Always special unitary.
inline Mat2c cayley(const AlgebraVector& a) {
    const double n2 = norm2(a);
    const double s = 1.0 / (1.0 + n2);
    const Complex i(0.0, 1.0);
    const Complex diag = s * Complex(1.0 - n2, 2.0 * a.z);
    const Complex off = s * 2.0 * Complex(a.y, a.x);
    return {diag, off, Complex(-off.real(), off.imag()), std::conj(diag)};
}

/// Componentwise pairing Re[ phi^dag (i sigma_a) w ], a = 1,2,3, expanded in
/// closed form.  This is the projection of a C^2 direction w onto the su(2)
/// directions at phi.
inline Vec3 su2_pairing(const ComplexPair& phi, const ComplexPair& w) {
    const Complex zc = std::conj(phi.z), uc = std::conj(phi.u);
    const Complex m1 = zc * w.u + uc * w.z;   // phi^dag sigma_1 w
    const Complex m2 = zc * w.u - uc * w.z;   // -i phi^dag sigma_2 w
    const Complex m3 = zc * w.z - uc * w.u;   // phi^dag sigma_3 w
    return {-m1.imag(), m2.real(), -m3.imag()};
}

}  // namespace pvort
