// Timing comparison of the OpenMP pairwise kernels against the serial
// reference loops, over a range of vortex counts.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "pvort/dynamics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pvort;

namespace {

SphereState random_state(int n, std::mt19937_64& gen) {
    std::normal_distribution<double> dist;
    SphereState s;
    for (int i = 0; i < n; ++i) {
        s.strengths.push_back(i % 2 ? 1.0 : -1.0);
        s.positions.push_back(normalized(Vec3{dist(gen), dist(gen), dist(gen)}));
    }
    return s;
}

template <class F>
double time_ms(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns are serial\n");
#endif
    std::printf("%8s %14s %16s %16s %9s\n", "N", "kernel", "parallel (ms)", "reference (ms)",
                "speedup");
    std::mt19937_64 gen(7);
    const Regularization reg{0.05};
    for (int n : {64, 256, 1024, 4096}) {
        const SphereState s = random_state(n, gen);
        const LiftedState l = lift_state(s);
        const int reps = n <= 256 ? 200 : 20;
        volatile double sink = 0.0;

        const double tge = time_ms([&] { sink = energy_sphere(s, reg); }, reps);
        const double rge = time_ms([&] { sink = ref::energy_sphere(s, reg); }, reps);
        std::printf("%8d %14s %16.3f %16.3f %8.2fx\n", n, "energy", tge, rge, rge / tge);

        const double tgg = time_ms([&] { sink = grad_energy_sphere(s, reg)[0].x; }, reps);
        const double rgg = time_ms([&] { sink = ref::grad_energy_sphere(s, reg)[0].x; }, reps);
        std::printf("%8d %14s %16.3f %16.3f %8.2fx\n", n, "gradient", tgg, rgg, rgg / tgg);

        const double tgv = time_ms([&] { sink = vector_field(s, reg)[0].x; }, reps);
        const double rgv = time_ms([&] { sink = ref::vector_field(s, reg)[0].x; }, reps);
        std::printf("%8d %14s %16.3f %16.3f %8.2fx\n", n, "velocity", tgv, rgv, rgv / tgv);

        const double tgl = time_ms([&] { sink = grad_energy_lifted(l, reg)[0].z.real(); }, reps);
        const double rgl =
            time_ms([&] { sink = ref::grad_energy_lifted(l, reg)[0].z.real(); }, reps);
        std::printf("%8d %14s %16.3f %16.3f %8.2fx\n", n, "lifted-grad", tgl, rgl, rgl / tgl);
        (void)sink;
    }
    return 0;
}
