#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pvort/scenarios.hpp"
#include "pvort/solver.hpp"
#include "pvort/state.hpp"

namespace pvort {

/// One simulation run: scenario, integrator, stepping and solver controls,
/// output destinations.  Flat key = value config files and CLI flags both
/// funnel through apply_override.
struct SimConfig {
    std::string scenario = "pd-ring";
    std::map<std::string, double> scenario_params;
    std::string integrator = "hopf";
    double h = 0.1;
    double sigma = 0.0;
    double t_max = 100.0;
    long output_every = 10;
    double tolerance = 1e-13;
    int max_iterations = 200;
    double alpha = 0.5;  // interpolation parameter of planar-alpha
    std::string output;
    std::string stereo_output;
    long seed = 0;

    void validate() const;
};

/// Names accepted for SimConfig::integrator.
const std::vector<std::string>& integrator_names();
bool integrator_is_planar(const std::string& name);
bool integrator_is_lifted(const std::string& name);

/// Parse a flat key = value file ('#' starts a comment line).
SimConfig parse_config_file(const std::string& path);

/// Apply one key/value pair (file line or CLI flag) to a config.
void apply_override(SimConfig& cfg, const std::string& key, const std::string& value);

/// Diagnostics at one output instant.  Positions are the flattened projected
/// coordinates (x,y,z per vortex; re,im for planar runs).
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double energy_error = 0.0;
    Vec3 moment{};
    double moment_error = 0.0;
    std::vector<double> coords;
};

struct RunSummary {
    long steps = 0;
    double max_abs_energy_error = 0.0;
    double max_moment_error = 0.0;
    double wall_seconds = 0.0;
    long solver_iterations = 0;
    std::string csv_path;
    std::string json_path;
};

struct SimResult {
    std::vector<DiagnosticsRecord> records;
    RunSummary summary;
};

/// Advance the configured scenario to t_max, recording diagnostics every
/// output_every steps (plus the initial and final states).  Writes the CSV
/// and its JSON summary sidecar when cfg.output is set.
SimResult run_simulation(const SimConfig& cfg);

/// One (h, error) sample of an order study; delta is the max-over-time
/// distance between the numerical and reference first-vortex trajectories.
struct OrderPoint {
    double h = 0.0;
    double delta = 0.0;
    bool converged = false;
};

struct OrderStudy {
    std::vector<OrderPoint> points;
    double slope = 0.0;  // least-squares slope of log(delta) vs log(h)
};

/// Run the configured integrator over [0, t_max] for each step size.  With
/// exact_reference the scenario must be pd-ring (rigid rotation); otherwise
/// the reference is an RK4 trajectory at h/20.  Non-convergent step sizes are
/// excluded from the fit and flagged in the table.
OrderStudy convergence_study(const SimConfig& base, const std::vector<double>& h_list,
                             bool exact_reference = true);

/// Stereographic chart from the north pole, x -> (x1, x2)/(1 - x3).
std::array<double, 2> stereographic(const Vec3& x);

}  // namespace pvort
