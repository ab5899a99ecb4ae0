#pragma once

#include <map>
#include <string>
#include <vector>

#include "pvort/state.hpp"

namespace pvort {

/// Ring of N equal vortices on the circle of colatitude theta0, first vortex
/// at azimuth zero.  Defaults are the stable six-vortex configuration.
SphereState make_pd_ring(int n = 6, double gamma = 1.0 / 6.0, double theta0 = 0.40);

/// Angular velocity of the ring about the z-axis,
/// Omega = (N-1) Gamma/(4pi) z0/(1-z0^2), z0 = cos(theta0).
double pd_ring_angular_velocity(int n, double gamma, double theta0);

/// Position of ring vortex k at time t: the initial position rotated about
/// the z-axis by Omega t.
Vec3 pd_exact_position(int n, double gamma, double theta0, int k, double t);

/// Two staggered five-vortex rings at colatitudes pi/3 and 2pi/3 (strength 1)
/// plus polar vortices of strength +1/2 (north) and -1/2 (south).
SphereState make_karman_street();

/// Strengths (1, 1, -1/2) on a spherical triangle with chords
/// (sqrt(3)/2, sqrt(2)/2, 1); the unregularized system self-similarly
/// collapses at tau = 4pi(sqrt(23) - sqrt(17)) ~ 8.4537.
SphereState make_collapse3();

/// Forty vortices of strength 1/8 equally spaced at colatitude arccos(0.9);
/// a discretized vortex sheet exhibiting the Kelvin-Helmholtz instability.
SphereState make_vortex_sheet();

/// Four planar vortices, strengths (.1, .3, -.2, -.4) at (0, .5i, 1, .7+.6i).
PlanarState make_planar_four();

/// Names accepted by the harness.
const std::vector<std::string>& scenario_names();

bool scenario_is_planar(const std::string& name);

/// Build a spherical scenario by name with optional parameter overrides
/// (pd-ring understands n, gamma, theta0).
SphereState make_sphere_scenario(const std::string& name,
                                 const std::map<std::string, double>& params);

/// Build a planar scenario by name.
PlanarState make_planar_scenario(const std::string& name);

}  // namespace pvort
