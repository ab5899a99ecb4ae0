#include <doctest.h>

#include <cmath>

#include "pvort/dynamics.hpp"
#include "pvort/errors.hpp"
#include "pvort/scenarios.hpp"
#include "test_helpers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pvort;
using pvort::test::random_unit_pair;
using pvort::test::random_unit_vec3;
using pvort::test::uniform;

namespace {

SphereState random_sphere_state(int n) {
    SphereState s;
    for (int i = 0; i < n; ++i) {
        s.strengths.push_back(uniform(-1.0, 1.0));
        if (std::abs(s.strengths.back()) < 0.1) s.strengths.back() = 0.3;
        s.positions.push_back(random_unit_vec3());
    }
    return s;
}

LiftedState random_lifted_state(int n) {
    LiftedState s;
    for (int i = 0; i < n; ++i) {
        s.strengths.push_back(uniform(-1.0, 1.0));
        if (std::abs(s.strengths.back()) < 0.1) s.strengths.back() = -0.4;
        s.pairs.push_back(random_unit_pair());
    }
    return s;
}

}  // namespace

TEST_CASE("energy_sphere closed-form cases") {
    // antipodal unit pair: l^2 = 4
    SphereState two{{1.0, 1.0}, {{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}}};
    CHECK(std::abs(energy_sphere(two, {0.0}) - (-std::log(4.0) / (4.0 * M_PI))) < 1e-15);

    SphereState one{{2.0}, {{0.0, 0.0, 1.0}}};
    CHECK(energy_sphere(one, {0.0}) == 0.0);

    // collapse triangle: three chords sqrt(3)/2, sqrt(2)/2, 1 evaluated by hand
    const SphereState tri = make_collapse3();
    const double expected =
        -(1.0 / (4.0 * M_PI)) *
        (1.0 * 1.0 * std::log(3.0 / 4.0) + 1.0 * (-0.5) * std::log(2.0 / 4.0) +
         (-0.5) * 1.0 * std::log(1.0));
    CHECK(std::abs(energy_sphere(tri, {0.0}) - expected) < 1e-14);
}

TEST_CASE("coincident vortices raise a singularity naming the pair") {
    SphereState s{{1.0, 1.0, 1.0},
                  {{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}};
    CHECK_THROWS_WITH_AS(energy_sphere(s, {0.0}), doctest::Contains("(1,2)"),
                         singularity_error);
    CHECK_THROWS_AS(grad_energy_sphere(s, {0.0}), singularity_error);
    CHECK_THROWS_AS(vector_field(s, {0.0}), singularity_error);
    // regularized, the same state is fine
    CHECK(std::isfinite(energy_sphere(s, {0.1})));
}

TEST_CASE("grad_energy_sphere against central finite differences") {
    SphereState one{{2.0}, {{0.0, 0.0, 1.0}}};
    CHECK(max_abs(grad_energy_sphere(one, {0.0})[0]) == 0.0);

    const Regularization reg{0.05};
    for (int trial = 0; trial < 20; ++trial) {
        SphereState s = random_sphere_state(5);
        const auto g = grad_energy_sphere(s, reg);
        const double fd_h = 1e-6;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (int c = 0; c < 3; ++c) {
                SphereState sp = s, sm = s;
                double* pp = c == 0 ? &sp.positions[i].x : c == 1 ? &sp.positions[i].y
                                                                  : &sp.positions[i].z;
                double* pm = c == 0 ? &sm.positions[i].x : c == 1 ? &sm.positions[i].y
                                                                  : &sm.positions[i].z;
                *pp += fd_h;
                *pm -= fd_h;
                const double fd = (energy_sphere(sp, reg) - energy_sphere(sm, reg)) / (2 * fd_h);
                const double an = c == 0 ? g[i].x : c == 1 ? g[i].y : g[i].z;
                CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
            }
        }
    }

    // equal strengths at antipodes: gradients equal and opposite along the axis
    SphereState anti{{1.0, 1.0}, {{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}}};
    const auto g = grad_energy_sphere(anti, {0.0});
    CHECK(max_abs(g[0] + g[1]) < 1e-15);
    CHECK(std::abs(g[0].x) < 1e-15);
    CHECK(std::abs(g[0].y) < 1e-15);
}

TEST_CASE("vector_field tangency, gradient relation, and moment sum") {
    SphereState one{{2.0}, {{0.0, 0.0, 1.0}}};
    CHECK(max_abs(vector_field(one, {0.0})[0]) == 0.0);

    const Regularization reg{0.1};
    for (int trial = 0; trial < 50; ++trial) {
        SphereState s = random_sphere_state(6);
        const auto v = vector_field(s, reg);
        const auto g = grad_energy_sphere(s, reg);
        Vec3 moment_rate{};
        for (std::size_t k = 0; k < s.size(); ++k) {
            CHECK(std::abs(dot(s.positions[k], v[k])) < 1e-12);
            CHECK(max_abs(s.strengths[k] * v[k] - cross(g[k], s.positions[k])) < 1e-10);
            moment_rate += s.strengths[k] * v[k];
        }
        CHECK(max_abs(moment_rate) < 1e-10);
    }
}

TEST_CASE("vector_field on the ring matches the rigid rotation rate") {
    const SphereState ring = make_pd_ring();
    const double omega = pd_ring_angular_velocity(6, 1.0 / 6.0, 0.40);
    const auto v = vector_field(ring, {0.0});
    const Vec3 zhat{0.0, 0.0, 1.0};
    for (std::size_t k = 0; k < ring.size(); ++k)
        CHECK(max_abs(v[k] - omega * cross(zhat, ring.positions[k])) < 1e-10);
}

TEST_CASE("energy_lifted pulls back energy_sphere") {
    LiftedState one{{1.0}, {{1.0, 0.0}}};
    CHECK(energy_lifted(one, {0.0}) == 0.0);

    for (int trial = 0; trial < 1000; ++trial) {
        LiftedState s = random_lifted_state(4);
        const double el = energy_lifted(s, {0.07});
        const double es = energy_sphere(project_state(s), {0.07});
        CHECK(std::abs(el - es) < 1e-12);
    }
}

TEST_CASE("energy_lifted is invariant under per-vortex phases") {
    for (int trial = 0; trial < 200; ++trial) {
        LiftedState s = random_lifted_state(4);
        const double e0 = energy_lifted(s, {0.05});
        LiftedState t = s;
        for (auto& p : t.pairs) p = std::polar(1.0, uniform(-M_PI, M_PI)) * p;
        CHECK(std::abs(energy_lifted(t, {0.05}) - e0) < 1e-12);
    }
}

TEST_CASE("chord and fiber distances agree through the projection") {
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexPair p = random_unit_pair(), q = random_unit_pair();
        const double chord2 = norm2(hopf_project(p) - hopf_project(q));
        const double fiber2 = 4.0 * (1.0 - std::norm(hermitian_inner(p, q)));
        CHECK(std::abs(chord2 - fiber2) < 1e-12);
    }
}

TEST_CASE("grad_energy_lifted against directional finite differences") {
    LiftedState one{{1.0}, {{1.0, 0.0}}};
    CHECK(max_abs(grad_energy_lifted(one, {0.0})[0]) == 0.0);

    const Regularization reg{0.05};
    for (int trial = 0; trial < 20; ++trial) {
        LiftedState s = random_lifted_state(4);
        const auto g = grad_energy_lifted(s, reg);
        const double fd_h = 1e-6;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const ComplexPair dir = {{test::randn(), test::randn()},
                                     {test::randn(), test::randn()}};
            LiftedState sp = s, sm = s;
            sp.pairs[i] += fd_h * dir;
            sm.pairs[i] -= fd_h * dir;
            const double fd = (energy_lifted(sp, reg) - energy_lifted(sm, reg)) / (2 * fd_h);
            // dH = 2 Re[ (dphi)^dag D_{phi^dag}H ]
            const double an = 2.0 * hermitian_inner(dir, g[i]).real();
            CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
        }
    }
}

TEST_CASE("grad_energy_lifted satisfies the infinitesimal phase invariance") {
    for (int trial = 0; trial < 100; ++trial) {
        LiftedState s = random_lifted_state(5);
        const auto g = grad_energy_lifted(s, {0.02});
        for (std::size_t k = 0; k < s.size(); ++k) {
            // (dH/dphi) phi - phi^dag (dH/dphi^dag) = -2i Im <phi, g>
            CHECK(std::abs(hermitian_inner(s.pairs[k], g[k]).imag()) < 1e-12);
        }
    }
}

TEST_CASE("vortex_moment examples") {
    CHECK(max_abs(vortex_moment({{2.0}, {{0.0, 0.0, 1.0}}}) - Vec3{0.0, 0.0, 2.0}) == 0.0);
    SphereState anti{{1.0, 1.0}, {{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}}};
    CHECK(max_abs(vortex_moment(anti)) == 0.0);
    const SphereState ring = make_pd_ring();
    CHECK(max_abs(vortex_moment(ring) - Vec3{0.0, 0.0, std::cos(0.40)}) < 1e-15);
}

TEST_CASE("parallel kernels agree with the serial reference") {
    const Regularization reg{0.03};
    for (int n : {2, 7, 41}) {
        SphereState s = random_sphere_state(n);
        LiftedState l = random_lifted_state(n);
        CHECK(std::abs(energy_sphere(s, reg) - ref::energy_sphere(s, reg)) <=
              1e-14 * std::max(1.0, std::abs(ref::energy_sphere(s, reg))));
        const auto g1 = grad_energy_sphere(s, reg), g2 = ref::grad_energy_sphere(s, reg);
        const auto v1 = vector_field(s, reg), v2 = ref::vector_field(s, reg);
        for (int i = 0; i < n; ++i) {
            CHECK(max_abs(g1[i] - g2[i]) == 0.0);
            CHECK(max_abs(v1[i] - v2[i]) == 0.0);
        }
        CHECK(std::abs(energy_lifted(l, reg) - ref::energy_lifted(l, reg)) <= 1e-14);
        const auto lg1 = grad_energy_lifted(l, reg), lg2 = ref::grad_energy_lifted(l, reg);
        for (int i = 0; i < n; ++i) CHECK(max_abs(lg1[i] - lg2[i]) == 0.0);
    }
}

#ifdef _OPENMP
TEST_CASE("kernel results are independent of the thread count") {
    SphereState s = random_sphere_state(33);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double e1 = energy_sphere(s, {0.02});
    const auto g1 = grad_energy_sphere(s, {0.02});
    omp_set_num_threads(std::max(2, saved));
    const double e2 = energy_sphere(s, {0.02});
    const auto g2 = grad_energy_sphere(s, {0.02});
    omp_set_num_threads(saved);
    CHECK(e1 == e2);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(max_abs(g1[i] - g2[i]) == 0.0);
}
#endif
