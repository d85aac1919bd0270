#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rossby/config.hpp"
#include "rossby/fieldio.hpp"
#include "rossby/kernels.hpp"
#include "rossby/sweep.hpp"
#include "rossby/verify.hpp"

namespace {

struct FamilyRow {
    int id;
    const char* profile;
    const char* kappa;
    const char* params;
    const char* constraint;
    const char* zonal;
};

const FamilyRow kFamilies[] = {
    {1, "f(z) = 1", "kappa = pi*n/H", "n = 1, 2, 3, ...; P real",
     "n >= 1 integer",
     "g(z) = P cos(pi n z/H) - beta H^2/(pi^2 n^2) - V"},
    {2, "f(z) = sin(k_z z)", "kappa = K_r", "k_z, K_r real; K^2 = k_z^2 + K_r^2",
     "K_r != 0; non-resonant depth",
     "g(z) = beta (M sin(K z) + cos(K z) - 1)/K^2 - V"},
    {3, "f(z) = cos(k_z z)", "kappa = K_r", "k_z, K_r real; K^2 = k_z^2 + K_r^2",
     "K_r != 0; non-resonant depth",
     "g(z) = beta (M cos(K z) - 1)/K^2 - V"},
    {4, "f(z) = sinh(k_z z)", "kappa = K_r", "k_z, K_r real; K^2 = K_r^2 - k_z^2",
     "k_z < K_r; non-resonant depth",
     "g(z) = beta (M sin(K z) + cos(K z) - 1)/K^2 - V"},
    {5, "f(z) = sinh(k_z z)", "kappa = K_r", "k_z, K_r real; K^2 = k_z^2 - K_r^2",
     "k_z > K_r; non-resonant depth",
     "g(z) = beta (M sinh(K z) - cosh(K z) + 1)/K^2 - V"},
    {6, "f(z) = sinh(k_z z)", "kappa = k_z", "k_z real",
     "k_z != 0; non-resonant depth",
     "g(z) = -beta z^2/2 + beta H M z/2 - V"},
    {7, "f(z) = cosh(k_z z)", "kappa = K_r", "k_z, K_r real; K^2 = K_r^2 - k_z^2",
     "k_z < K_r; non-resonant depth",
     "g(z) = beta (M cos(K z) - 1)/K^2 - V"},
    {8, "f(z) = cosh(k_z z)", "kappa = K_r", "k_z, K_r real; K^2 = k_z^2 - K_r^2",
     "k_z > K_r; non-resonant depth",
     "g(z) = beta (M cosh(K z) + 1)/K^2 - V"},
    {9, "f(z) = cosh(k_z z)", "kappa = k_z", "k_z real",
     "k_z != 0; non-resonant depth",
     "g(z) = -beta z^2/2 + beta H^2 M/2 - V"},
};

void cmd_list_families() {
    std::printf("Nine exact drifting solutions p = f(z) F(x - V t, y) + g(z) y of the\n");
    std::printf("Charney-Obukhov ocean equation with flat-bottom/rigid-lid conditions.\n");
    std::printf("F solves F_ss + F_yy + kappa^2 F = 0 (plane waves, Bessel vortices,\n");
    std::printf("superpositions at one kappa).\n\n");
    for (const auto& f : kFamilies) {
        std::printf("family %d\n", f.id);
        std::printf("  vertical profile : %s\n", f.profile);
        std::printf("  wavenumber       : %s\n", f.kappa);
        std::printf("  free parameters  : %s\n", f.params);
        std::printf("  constraints      : %s\n", f.constraint);
        std::printf("  zonal coefficient: %s\n", f.zonal);
    }
}

rossby::Solution solution_from_config(const rossby::RunConfig& config) {
    const rossby::ValidatedSpec spec = rossby::validate(config.family, config.phys);
    return rossby::build_solution(spec, rossby::make_mode(config, spec));
}

int cmd_verify(const std::string& path, bool quiet) {
    const rossby::RunConfig config = rossby::load_config(path);
    const rossby::Solution sol = solution_from_config(config);
    const rossby::VerificationReport report = rossby::verify_solution(sol, config.plan);
    if (!config.outputs.report.empty()) {
        rossby::write_report(report, rossby::config_echo(config), config.outputs.report);
    }
    if (!quiet) {
        for (const auto& c : report.checks) {
            std::printf("%-18s max %.3e  mean %.3e  tol %.1e  [%s]\n", c.name.c_str(), c.max,
                        c.mean, c.tol, c.pass ? "pass" : "FAIL");
        }
        std::printf("overall: %s\n", report.pass ? "pass" : "FAIL");
    }
    return report.pass ? 0 : 2;
}

int cmd_build(const std::string& path, bool quiet) {
    const rossby::RunConfig config = rossby::load_config(path);
    if (!config.has_grid) {
        throw rossby::ConfigError("grid: required by the build command");
    }
    if (config.outputs.csv.empty() && config.outputs.vtk.empty()) {
        throw rossby::ConfigError("outputs: build needs outputs.csv and/or outputs.vtk");
    }
    const rossby::Solution sol = solution_from_config(config);
    const rossby::FieldBlock block = rossby::sample_grid(sol, config.grid);
    if (!config.outputs.csv.empty()) {
        rossby::export_csv(block, config.outputs.csv);
    }
    if (!config.outputs.vtk.empty()) {
        rossby::export_vtk(block, config.outputs.vtk);
    }
    if (!quiet) {
        auto span = [](const std::vector<double>& v) {
            const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            return std::pair<double, double>(*lo, *hi);
        };
        const auto [pmin, pmax] = span(block.p);
        const auto [umin, umax] = span(block.u);
        const auto [vmin, vmax] = span(block.v);
        std::printf("sampled %zu points (kernel backend: %s)\n", block.p.size(),
                    rossby::kernels::active_backend().name);
        std::printf("p   in [%.6g, %.6g]\n", pmin, pmax);
        std::printf("u   in [%.6g, %.6g]\n", umin, umax);
        std::printf("v   in [%.6g, %.6g]\n", vmin, vmax);
    }
    return 0;
}

int cmd_sweep(const std::string& path, bool quiet) {
    const rossby::RunConfig config = rossby::load_config(path);
    if (!config.sweep.present) {
        throw rossby::ConfigError("sweep: required by the sweep command");
    }
    if (config.sweep.output.empty()) {
        throw rossby::ConfigError("sweep.output: required by the sweep command");
    }
    const rossby::SweepResult result =
        rossby::sweep_parameter(config.family, config.phys, config.sweep.parameter,
                                config.sweep.from, config.sweep.to, config.sweep.samples);
    rossby::write_sweep_csv(result, config.sweep.output);
    for (double r : result.resonances) {
        std::printf("RESONANCE %s=%.17g\n", result.parameter.c_str(), r);
    }
    if (!quiet) {
        std::printf("swept %zu samples of %s; %zu resonance(s) located; table: %s\n",
                    result.rows.size(), result.parameter.c_str(), result.resonances.size(),
                    config.sweep.output.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact drifting Rossby waves and vortices of the (3+1)D Charney-Obukhov "
                 "ocean equation, with residual certification"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress summary text");

    auto* list = app.add_subcommand("list-families", "describe the nine solution families");
    std::string verify_path, build_path, sweep_path;
    auto* verify = app.add_subcommand("verify", "run certification checks from a config");
    verify->add_option("config", verify_path, "JSON run configuration")->required();
    auto* build = app.add_subcommand("build", "sample a grid and export CSV/VTK fields");
    build->add_option("config", build_path, "JSON run configuration")->required();
    auto* sweep = app.add_subcommand("sweep", "tabulate M over a parameter range");
    sweep->add_option("config", sweep_path, "JSON run configuration")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            cmd_list_families();
            return 0;
        }
        if (verify->parsed()) return cmd_verify(verify_path, quiet);
        if (build->parsed()) return cmd_build(build_path, quiet);
        if (sweep->parsed()) return cmd_sweep(sweep_path, quiet);
    } catch (const rossby::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
