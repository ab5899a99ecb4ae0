#pragma once

#include <cmath>

namespace pvort {

/// Cartesian 3-vector with the usual componentwise and product operations.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

inline Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

inline double max_abs(const Vec3& a) {
    return std::max(std::abs(a.x), std::max(std::abs(a.y), std::abs(a.z)));
}

/// Rotation of v about the z-axis by the given angle.
inline Vec3 rotate_z(const Vec3& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

/// Rodrigues rotation of v by the rotation vector xi (axis xi/|xi|, angle |xi|).
/// Small angles are handled with series-stable coefficients.
inline Vec3 rotate_by(const Vec3& xi, const Vec3& v) {
    const double th2 = norm2(xi);
    if (th2 == 0.0) return v;
    const double th = std::sqrt(th2);
    double sinc, versc;  // sin(th)/th, (1-cos(th))/th^2
    if (th < 1e-4) {
        sinc = 1.0 - th2 / 6.0;
        versc = 0.5 - th2 / 24.0;
    } else {
        sinc = std::sin(th) / th;
        versc = (1.0 - std::cos(th)) / th2;
    }
    return v + sinc * cross(xi, v) + versc * cross(xi, cross(xi, v));
}

}  // namespace pvort
