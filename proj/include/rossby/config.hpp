#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rossby/fieldio.hpp"
#include "rossby/helmholtz.hpp"
#include "rossby/model.hpp"
#include "rossby/verify.hpp"

namespace rossby {

struct ModeConfig {
    std::string type;  // "plane_wave" | "bessel_vortex"
    double amplitude = 1.0;
    double phase = 0.0;
    double direction = 0.0;  // plane_wave only
    int m = 0;               // bessel_vortex only
    double center_s = 0.0;
    double center_y = 0.0;
};

struct SweepConfig {
    bool present = false;
    std::string parameter;  // "k_z" | "K_r"
    double from = 0.0;
    double to = 0.0;
    int samples = 0;
    std::string output;
};

struct OutputPaths {
    std::string report;
    std::string csv;
    std::string vtk;
};

// One declarative run: physics + family + modes + plan (+ grid, sweep,
// output paths). Parsed from a single JSON file.
struct RunConfig {
    PhysicalParams phys;
    FamilySpec family;
    std::vector<ModeConfig> modes;
    SamplingPlan plan;
    bool has_grid = false;
    GridSpec grid;
    SweepConfig sweep;
    OutputPaths outputs;
};

// Throws ConfigError naming the offending field path.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const nlohmann::json& j);

// Builds the horizontal mode at the family's kappa. An empty mode list is
// the zero field.
HorizontalMode make_mode(const RunConfig& config, const ValidatedSpec& spec);

// Fully resolved configuration echo for report embedding.
nlohmann::json config_echo(const RunConfig& config);

}  // namespace rossby
