// Command-line driver: run simulations, order studies, and list the
// available scenarios and integrators.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvort/errors.hpp"
#include "pvort/sim.hpp"

namespace {

struct Overrides {
    std::vector<std::pair<std::string, std::string>> kv;

    void add_flag(CLI::App* cmd, const std::string& flag, const std::string& key,
                  const std::string& desc) {
        auto holder = std::make_shared<std::string>();
        cmd->add_option_function<std::string>(
               flag,
               [this, key, holder](const std::string& v) { kv.emplace_back(key, v); },
               desc)
            ->expected(1);
    }
};

pvort::SimConfig build_config(const std::string& config_path, const Overrides& overrides) {
    pvort::SimConfig cfg;
    if (!config_path.empty()) cfg = pvort::parse_config_file(config_path);
    for (const auto& [key, value] : overrides.kv) pvort::apply_override(cfg, key, value);
    return cfg;
}

std::vector<double> parse_h_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw pvort::config_error("order: empty --h-list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point-vortex simulator on the unit sphere"};
    app.require_subcommand(1);

    std::string run_config, order_config, h_list_text, reference = "exact";

    CLI::App* run = app.add_subcommand("run", "Advance a scenario and write diagnostics");
    run->add_option("--config", run_config, "flat key = value config file");
    Overrides run_ov;
    run_ov.add_flag(run, "--scenario", "scenario", "scenario name");
    run_ov.add_flag(run, "--integrator", "integrator", "integrator name");
    run_ov.add_flag(run, "--h", "h", "time step");
    run_ov.add_flag(run, "--sigma", "sigma", "regularization parameter");
    run_ov.add_flag(run, "--t-max", "t_max", "final time");
    run_ov.add_flag(run, "--output-every", "output_every", "steps between records");
    run_ov.add_flag(run, "--tolerance", "tolerance", "implicit solver tolerance");
    run_ov.add_flag(run, "--max-iterations", "max_iterations", "implicit solver iteration cap");
    run_ov.add_flag(run, "--alpha", "alpha", "planar-alpha interpolation parameter");
    run_ov.add_flag(run, "--output", "output", "diagnostics CSV path");
    run_ov.add_flag(run, "--stereo-output", "stereo_output", "stereographic CSV path");
    run_ov.add_flag(run, "--seed", "seed", "seed recorded with the run");

    CLI::App* order = app.add_subcommand("order", "Convergence study against a reference");
    order->add_option("--config", order_config, "flat key = value config file");
    order->add_option("--h-list", h_list_text, "comma-separated step sizes")->required();
    order->add_option("--reference", reference, "exact | fine-step");
    Overrides order_ov;
    order_ov.add_flag(order, "--scenario", "scenario", "scenario name");
    order_ov.add_flag(order, "--integrator", "integrator", "integrator name");
    order_ov.add_flag(order, "--sigma", "sigma", "regularization parameter");
    order_ov.add_flag(order, "--t-max", "t_max", "final time");
    order_ov.add_flag(order, "--tolerance", "tolerance", "implicit solver tolerance");
    order_ov.add_flag(order, "--max-iterations", "max_iterations",
                      "implicit solver iteration cap");

    CLI::App* ls = app.add_subcommand("list-scenarios", "Print scenario names");
    CLI::App* li = app.add_subcommand("list-integrators", "Print integrator names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            pvort::SimConfig cfg = build_config(run_config, run_ov);
            const pvort::SimResult result = pvort::run_simulation(cfg);
            const auto& s = result.summary;
            std::printf("steps %ld  records %zu  max|dE| %.6e  max|dM| %.6e  wall %.3fs"
                        "  solver-iterations %ld\n",
                        s.steps, result.records.size(), s.max_abs_energy_error,
                        s.max_moment_error, s.wall_seconds, s.solver_iterations);
            if (!s.csv_path.empty())
                std::printf("wrote %s and %s\n", s.csv_path.c_str(), s.json_path.c_str());
        } else if (order->parsed()) {
            if (reference != "exact" && reference != "fine-step")
                throw pvort::config_error("order: --reference must be 'exact' or 'fine-step'");
            pvort::SimConfig cfg = build_config(order_config, order_ov);
            const pvort::OrderStudy study =
                pvort::convergence_study(cfg, parse_h_list(h_list_text), reference == "exact");
            std::printf("h,delta,converged\n");
            for (const auto& p : study.points)
                std::printf("%.17g,%.17g,%d\n", p.h, p.delta, p.converged ? 1 : 0);
            std::printf("slope = %.6f\n", study.slope);
        } else if (ls->parsed()) {
            for (const auto& name : pvort::scenario_names()) std::printf("%s\n", name.c_str());
        } else if (li->parsed()) {
            for (const auto& name : pvort::integrator_names()) std::printf("%s\n", name.c_str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
