#include "pvort/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "pvort/dynamics.hpp"
#include "pvort/errors.hpp"
#include "pvort/integrators.hpp"
#include "pvort/lifted_general.hpp"
#include "pvort/planar.hpp"

namespace pvort {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw config_error("config: bad numeric value '" + value + "' for key '" + key + "'");
    }
    if (pos != value.size())
        throw config_error("config: bad numeric value '" + value + "' for key '" + key + "'");
    return v;
}

/// Uniform stepping interface over the three state families.  Two-step
/// methods are seeded by one step of the matching one-step midpoint method.
class Driver {
public:
    Driver(const SimConfig& cfg)
        : cfg_(cfg), reg_{cfg.sigma}, solver_{cfg.tolerance, cfg.max_iterations} {
        if (integrator_is_planar(cfg_.integrator)) {
            planar_ = make_planar_scenario(cfg_.scenario);
            return;
        }
        SphereState init = make_sphere_scenario(cfg_.scenario, cfg_.scenario_params);
        init.validate();
        if (integrator_is_lifted(cfg_.integrator)) {
            lifted_ = lift_state(init);
        } else {
            sphere_ = init;
        }
    }

    void step() {
        ++n_;
        const std::string& name = cfg_.integrator;
        if (name == "hopf") {
            accept(step_hopf(lifted_, cfg_.h, reg_, solver_));
        } else if (name == "hopf-trapezoid" || name == "hopf-general") {
            if (n_ == 1) {
                prev_lifted_ = lifted_;
                accept(step_hopf(lifted_, cfg_.h, reg_, solver_));
            } else {
                LiftedState prev = std::exchange(prev_lifted_, lifted_);
                accept(name == "hopf-trapezoid"
                           ? step_trapezoid_twostep(prev, lifted_, cfg_.h, reg_, solver_)
                           : step_general(prev, lifted_, cfg_.h, reg_, solver_));
            }
        } else if (name == "midpoint-s2") {
            accept(step_midpoint_s2(sphere_, cfg_.h, reg_, solver_));
        } else if (name == "rk4") {
            sphere_ = step_rk4_projected(sphere_, cfg_.h, reg_);
        } else if (name == "rk2") {
            sphere_ = step_rk2_projected(sphere_, cfg_.h, reg_);
        } else if (name == "lie-poisson") {
            accept(step_lie_poisson(sphere_, cfg_.h, reg_, solver_));
        } else if (name == "planar-midpoint") {
            accept(step_midpoint_plane(planar_, cfg_.h, solver_));
        } else if (name == "planar-alpha") {
            if (n_ == 1) {
                prev_planar_ = planar_;
                accept(step_midpoint_plane(planar_, cfg_.h, solver_));
            } else {
                PlanarState prev = std::exchange(prev_planar_, planar_);
                accept(step_alpha(prev, planar_, cfg_.alpha, cfg_.h, solver_));
            }
        } else {
            throw config_error("unknown integrator '" + name + "'");
        }
    }

    bool planar() const { return integrator_is_planar(cfg_.integrator); }
    bool lifted() const { return integrator_is_lifted(cfg_.integrator); }
    const PlanarState& planar_state() const { return planar_; }
    const LiftedState& lifted_state() const { return lifted_; }
    /// Current configuration in the on-sphere representation.
    SphereState sphere_state() const { return lifted() ? project_state(lifted_) : sphere_; }
    long solver_iterations() const { return iterations_; }

private:
    template <class S>
    void accept(StepRecord<S>&& rec) {
        iterations_ += rec.iterations;
        store(std::move(rec.state));
    }
    void store(LiftedState&& s) { lifted_ = std::move(s); }
    void store(SphereState&& s) { sphere_ = std::move(s); }
    void store(PlanarState&& s) { planar_ = std::move(s); }

    SimConfig cfg_;
    Regularization reg_;
    SolverConfig solver_;
    SphereState sphere_;
    LiftedState lifted_, prev_lifted_;
    PlanarState planar_, prev_planar_;
    long n_ = 0;
    long iterations_ = 0;
};

}  // namespace

const std::vector<std::string>& integrator_names() {
    static const std::vector<std::string> names = {
        "hopf",          "midpoint-s2",  "rk4",          "rk2",           "lie-poisson",
        "hopf-trapezoid", "hopf-general", "planar-alpha", "planar-midpoint"};
    return names;
}

bool integrator_is_planar(const std::string& name) {
    return name == "planar-alpha" || name == "planar-midpoint";
}

bool integrator_is_lifted(const std::string& name) {
    return name == "hopf" || name == "hopf-trapezoid" || name == "hopf-general";
}

void SimConfig::validate() const {
    const auto& names = integrator_names();
    if (std::find(names.begin(), names.end(), integrator) == names.end())
        throw config_error("unknown integrator '" + integrator + "'");
    const auto& scenarios = scenario_names();
    if (std::find(scenarios.begin(), scenarios.end(), scenario) == scenarios.end())
        throw config_error("unknown scenario '" + scenario + "'");
    if (integrator_is_planar(integrator) != scenario_is_planar(scenario))
        throw config_error("integrator '" + integrator + "' is incompatible with scenario '" +
                           scenario + "'");
    if (!(h > 0.0)) throw config_error("config: h must be positive");
    if (!(t_max > 0.0)) throw config_error("config: t_max must be positive");
    if (sigma < 0.0) throw config_error("config: sigma must be >= 0");
    if (output_every < 1) throw config_error("config: output_every must be >= 1");
    if (!(tolerance > 0.0)) throw config_error("config: tolerance must be positive");
    if (max_iterations < 1) throw config_error("config: max_iterations must be >= 1");
    if (alpha < 0.0 || alpha > 1.0) throw config_error("config: alpha must lie in [0,1]");
}

void apply_override(SimConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "scenario") cfg.scenario = value;
    else if (key == "integrator") cfg.integrator = value;
    else if (key == "h") cfg.h = parse_double(key, value);
    else if (key == "sigma") cfg.sigma = parse_double(key, value);
    else if (key == "t_max") cfg.t_max = parse_double(key, value);
    else if (key == "output_every") cfg.output_every = static_cast<long>(parse_double(key, value));
    else if (key == "tolerance") cfg.tolerance = parse_double(key, value);
    else if (key == "max_iterations")
        cfg.max_iterations = static_cast<int>(parse_double(key, value));
    else if (key == "alpha") cfg.alpha = parse_double(key, value);
    else if (key == "output") cfg.output = value;
    else if (key == "stereo_output") cfg.stereo_output = value;
    else if (key == "seed") cfg.seed = static_cast<long>(parse_double(key, value));
    else if (key.rfind("scenario.", 0) == 0)
        cfg.scenario_params[key.substr(9)] = parse_double(key, value);
    else
        throw config_error("config: unknown key '" + key + "'");
}

SimConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error("config " + path + ":" + std::to_string(lineno) +
                               ": expected key = value");
        apply_override(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return cfg;
}

std::array<double, 2> stereographic(const Vec3& x) {
    if (x.z >= 1.0 - 1e-12)
        throw std::domain_error("stereographic: point too close to the north pole");
    return {x.x / (1.0 - x.z), x.y / (1.0 - x.z)};
}

namespace {

DiagnosticsRecord make_record(const Driver& d, const SimConfig& cfg, double t) {
    DiagnosticsRecord rec;
    rec.t = t;
    if (d.planar()) {
        const PlanarState& s = d.planar_state();
        rec.energy = planar_energy(s);
        std::complex<double> impulse = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) impulse += s.strengths[i] * s.positions[i];
        rec.moment = {impulse.real(), impulse.imag(), 0.0};
        rec.coords.reserve(2 * s.size());
        for (const auto& z : s.positions) {
            rec.coords.push_back(z.real());
            rec.coords.push_back(z.imag());
        }
    } else {
        const SphereState s = d.sphere_state();
        rec.energy = energy_sphere(s, Regularization{cfg.sigma});
        rec.moment = vortex_moment(s);
        rec.coords.reserve(3 * s.size());
        for (const Vec3& x : s.positions) {
            rec.coords.push_back(x.x);
            rec.coords.push_back(x.y);
            rec.coords.push_back(x.z);
        }
    }
    return rec;
}

void write_csv(const SimConfig& cfg, const std::vector<DiagnosticsRecord>& records,
               bool planar) {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw config_error("cannot open output file '" + cfg.output + "'");
    const std::size_t nv = records.front().coords.size() / (planar ? 2 : 3);
    out << "t,E,dE,Mx,My,Mz,dM";
    for (std::size_t i = 0; i < nv; ++i) {
        if (planar)
            out << ",re" << i << ",im" << i;
        else
            out << ",x" << i << ",y" << i << ",z" << i;
    }
    out << "\n";
    for (const DiagnosticsRecord& r : records) {
        out << fmt17(r.t) << ',' << fmt17(r.energy) << ',' << fmt17(r.energy_error) << ','
            << fmt17(r.moment.x) << ',' << fmt17(r.moment.y) << ',' << fmt17(r.moment.z) << ','
            << fmt17(r.moment_error);
        for (double c : r.coords) out << ',' << fmt17(c);
        out << "\n";
    }
}

void write_stereo_csv(const SimConfig& cfg, const std::vector<DiagnosticsRecord>& records) {
    std::ofstream out(cfg.stereo_output, std::ios::binary);
    if (!out) throw config_error("cannot open output file '" + cfg.stereo_output + "'");
    const std::size_t nv = records.front().coords.size() / 3;
    out << "t";
    for (std::size_t i = 0; i < nv; ++i) out << ",u" << i << ",v" << i;
    out << "\n";
    for (const DiagnosticsRecord& r : records) {
        out << fmt17(r.t);
        for (std::size_t i = 0; i < nv; ++i) {
            const auto uv =
                stereographic({r.coords[3 * i], r.coords[3 * i + 1], r.coords[3 * i + 2]});
            out << ',' << fmt17(uv[0]) << ',' << fmt17(uv[1]);
        }
        out << "\n";
    }
}

void write_summary_json(const SimConfig& cfg, RunSummary& summary) {
    nlohmann::json j;
    j["scenario"] = cfg.scenario;
    j["integrator"] = cfg.integrator;
    j["h"] = cfg.h;
    j["sigma"] = cfg.sigma;
    j["t_max"] = cfg.t_max;
    j["steps"] = summary.steps;
    j["max_abs_energy_error"] = summary.max_abs_energy_error;
    j["max_moment_error"] = summary.max_moment_error;
    j["wall_seconds"] = summary.wall_seconds;
    j["solver_iterations"] = summary.solver_iterations;
    j["csv"] = summary.csv_path;
    summary.json_path = cfg.output + ".summary.json";
    std::ofstream out(summary.json_path, std::ios::binary);
    if (!out) throw config_error("cannot open output file '" + summary.json_path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace

SimResult run_simulation(const SimConfig& cfg) {
    cfg.validate();
    const auto t_start = std::chrono::steady_clock::now();
    Driver driver(cfg);
    const long steps = std::max<long>(1, std::llround(cfg.t_max / cfg.h));

    SimResult result;
    DiagnosticsRecord first = make_record(driver, cfg, 0.0);
    const double e0 = first.energy;
    const Vec3 m0 = first.moment;
    auto push = [&](DiagnosticsRecord&& rec) {
        rec.energy_error = rec.energy - e0;
        rec.moment_error = norm(rec.moment - m0);
        for (double c : rec.coords)
            if (!std::isfinite(c))
                throw step_error("non-finite state at t = " + fmt17(rec.t));
        result.summary.max_abs_energy_error =
            std::max(result.summary.max_abs_energy_error, std::abs(rec.energy_error));
        result.summary.max_moment_error =
            std::max(result.summary.max_moment_error, rec.moment_error);
        result.records.push_back(std::move(rec));
    };
    push(std::move(first));

    for (long n = 1; n <= steps; ++n) {
        try {
            driver.step();
        } catch (const std::exception& e) {
            throw step_error("step " + std::to_string(n) + ": " + e.what());
        }
        if (n % cfg.output_every == 0 || n == steps)
            push(make_record(driver, cfg, n * cfg.h));
    }

    result.summary.steps = steps;
    result.summary.solver_iterations = driver.solver_iterations();
    result.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    if (!cfg.output.empty()) {
        write_csv(cfg, result.records, driver.planar());
        result.summary.csv_path = cfg.output;
        if (!cfg.stereo_output.empty()) {
            if (driver.planar())
                throw config_error("stereo_output applies to spherical scenarios only");
            write_stereo_csv(cfg, result.records);
        }
        write_summary_json(cfg, result.summary);
    }
    return result;
}

OrderStudy convergence_study(const SimConfig& base, const std::vector<double>& h_list,
                             bool exact_reference) {
    if (integrator_is_planar(base.integrator))
        throw config_error("convergence_study supports spherical scenarios only");
    if (exact_reference && base.scenario != "pd-ring")
        throw config_error("exact reference requires the pd-ring scenario");
    auto get = [&](const std::string& key, double fallback) {
        auto it = base.scenario_params.find(key);
        return it == base.scenario_params.end() ? fallback : it->second;
    };
    const int ring_n = static_cast<int>(get("n", 6));
    const double ring_gamma = get("gamma", 1.0 / 6.0);
    const double ring_theta0 = get("theta0", 0.40);

    OrderStudy study;
    study.points.resize(h_list.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(h_list.size()); ++idx) {
        SimConfig cfg = base;
        cfg.h = h_list[idx];
        cfg.output.clear();
        cfg.stereo_output.clear();
        OrderPoint point{cfg.h, 0.0, false};
        try {
            const long steps = std::max<long>(1, std::llround(cfg.t_max / cfg.h));
            Driver driver(cfg);
            // Without an exact solution, the reference is RK4 at h/20 sampled
            // at the coarse steps.
            SimConfig fine = cfg;
            fine.h = cfg.h / 20.0;
            fine.integrator = "rk4";
            std::optional<Driver> fine_driver;
            if (!exact_reference) fine_driver.emplace(fine);
            double delta = 0.0;
            for (long nn = 1; nn <= steps; ++nn) {
                driver.step();
                Vec3 ref;
                if (exact_reference) {
                    ref = pd_exact_position(ring_n, ring_gamma, ring_theta0, 0, nn * cfg.h);
                } else {
                    for (int s = 0; s < 20; ++s) fine_driver->step();
                    ref = fine_driver->sphere_state().positions[0];
                }
                delta = std::max(delta, norm(driver.sphere_state().positions[0] - ref));
            }
            point.delta = delta;
            point.converged = true;
        } catch (const std::exception&) {
            // excluded from the fit; flagged in the table
        }
        study.points[idx] = point;
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int m = 0;
    for (const OrderPoint& p : study.points) {
        if (!p.converged || p.delta <= 0.0) continue;
        const double lx = std::log(p.h), ly = std::log(p.delta);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++m;
    }
    if (m < 2) throw convergence_error("convergence_study: fewer than two usable points", 0.0, 0);
    study.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return study;
}

}  // namespace pvort
