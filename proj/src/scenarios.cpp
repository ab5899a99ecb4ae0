#include "pvort/scenarios.hpp"

#include <cmath>

#include "pvort/errors.hpp"

namespace pvort {

SphereState make_pd_ring(int n, double gamma, double theta0) {
    if (n < 2 || theta0 <= 0.0 || theta0 >= M_PI)
        throw config_error("pd-ring: need n >= 2 and 0 < theta0 < pi");
    const double s = std::sin(theta0), c = std::cos(theta0);
    SphereState out;
    out.strengths.assign(n, gamma);
    out.positions.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * M_PI * k / n;
        out.positions.push_back({s * std::cos(phi), s * std::sin(phi), c});
    }
    return out;
}

double pd_ring_angular_velocity(int n, double gamma, double theta0) {
    const double z0 = std::cos(theta0);
    return (n - 1) * gamma / (4.0 * M_PI) * z0 / (1.0 - z0 * z0);
}

Vec3 pd_exact_position(int n, double gamma, double theta0, int k, double t) {
    const double omega = pd_ring_angular_velocity(n, gamma, theta0);
    const double s = std::sin(theta0), c = std::cos(theta0);
    const double phi = 2.0 * M_PI * k / n;
    return rotate_z({s * std::cos(phi), s * std::sin(phi), c}, omega * t);
}

SphereState make_karman_street() {
    SphereState out;
    const int n = 5;
    const double colat[2] = {M_PI / 3.0, M_PI - M_PI / 3.0};
    // Southern ring staggered by half the azimuthal spacing.
    const double offset[2] = {0.0, M_PI / n};
    for (int ring = 0; ring < 2; ++ring) {
        const double s = std::sin(colat[ring]), c = std::cos(colat[ring]);
        for (int k = 0; k < n; ++k) {
            const double phi = 2.0 * M_PI * k / n + offset[ring];
            out.strengths.push_back(1.0);
            out.positions.push_back({s * std::cos(phi), s * std::sin(phi), c});
        }
    }
    out.strengths.push_back(0.5);
    out.positions.push_back({0.0, 0.0, 1.0});
    out.strengths.push_back(-0.5);
    out.positions.push_back({0.0, 0.0, -1.0});
    return out;
}

SphereState make_collapse3() {
    const double l12 = std::sqrt(3.0) / 2.0, l23 = std::sqrt(2.0) / 2.0, l31 = 1.0;
    // Vortex 1 at the north pole, vortex 2 in the x-z plane, vortex 3 with
    // positive y; chord l fixes the dot product 1 - l^2/2.
    const Vec3 x1{0.0, 0.0, 1.0};
    const double c12 = 1.0 - l12 * l12 / 2.0;
    const Vec3 x2{std::sqrt(1.0 - c12 * c12), 0.0, c12};
    const double z3 = 1.0 - l31 * l31 / 2.0;
    const double c23 = 1.0 - l23 * l23 / 2.0;
    const double a = (c23 - x2.z * z3) / x2.x;
    const Vec3 x3{a, std::sqrt(1.0 - z3 * z3 - a * a), z3};
    return {{1.0, 1.0, -0.5}, {x1, x2, x3}};
}

SphereState make_vortex_sheet() {
    SphereState out;
    const int n = 40;
    const double c = 0.9, s = std::sqrt(1.0 - c * c);
    for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * M_PI * k / n;
        out.strengths.push_back(1.0 / 8.0);
        out.positions.push_back({s * std::cos(phi), s * std::sin(phi), c});
    }
    return out;
}

PlanarState make_planar_four() {
    using Cx = std::complex<double>;
    return {{0.1, 0.3, -0.2, -0.4}, {Cx(0.0, 0.0), Cx(0.0, 0.5), Cx(1.0, 0.0), Cx(0.7, 0.6)}};
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"pd-ring", "karman-street", "collapse3",
                                                   "vortex-sheet", "planar-four"};
    return names;
}

bool scenario_is_planar(const std::string& name) { return name == "planar-four"; }

SphereState make_sphere_scenario(const std::string& name,
                                 const std::map<std::string, double>& params) {
    auto get = [&](const std::string& key, double fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (name == "pd-ring")
        return make_pd_ring(static_cast<int>(get("n", 6)), get("gamma", 1.0 / 6.0),
                            get("theta0", 0.40));
    if (name != "karman-street" && name != "collapse3" && name != "vortex-sheet")
        throw config_error("unknown spherical scenario '" + name + "'");
    for (const auto& [key, value] : params)
        throw config_error("scenario '" + name + "' takes no parameter '" + key + "'");
    if (name == "karman-street") return make_karman_street();
    if (name == "collapse3") return make_collapse3();
    return make_vortex_sheet();
}

PlanarState make_planar_scenario(const std::string& name) {
    if (name == "planar-four") return make_planar_four();
    throw config_error("unknown planar scenario '" + name + "'");
}

}  // namespace pvort
