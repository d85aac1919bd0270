#include "rossby/config.hpp"

#include <fstream>

namespace rossby {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

const json& member(const json& j, const std::string& path, const std::string& key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing required field");
    return *it;
}

double get_num(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::string get_str(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

double opt_num(const json& j, const std::string& path, const std::string& key, double dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return get_num(j.at(key), path + "." + key);
}

int opt_int(const json& j, const std::string& path, const std::string& key, int dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return get_int(j.at(key), path + "." + key);
}

std::string opt_str(const json& j, const std::string& path, const std::string& key,
                    const std::string& dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return get_str(j.at(key), path + "." + key);
}

void get_range(const json& j, const std::string& path, double& lo, double& hi) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [lo, hi]");
    lo = get_num(j.at(0), path + "[0]");
    hi = get_num(j.at(1), path + "[1]");
}

ModeConfig parse_mode(const json& j, const std::string& path) {
    ModeConfig m;
    m.type = get_str(member(j, path, "type"), path + ".type");
    if (m.type != "plane_wave" && m.type != "bessel_vortex") {
        fail(path + ".type", "expected \"plane_wave\" or \"bessel_vortex\"");
    }
    m.amplitude = opt_num(j, path, "amplitude", 1.0);
    m.phase = opt_num(j, path, "phase", 0.0);
    if (m.type == "plane_wave") {
        m.direction = opt_num(j, path, "direction", 0.0);
    } else {
        m.m = opt_int(j, path, "m", 0);
        if (j.contains("center")) {
            get_range(j.at("center"), path + ".center", m.center_s, m.center_y);
        }
    }
    return m;
}

}  // namespace

RunConfig parse_config(const nlohmann::json& j) {
    RunConfig c;

    const json& phys = member(j, "$", "physical");
    c.phys.beta = get_num(member(phys, "physical", "beta"), "physical.beta");
    c.phys.H = get_num(member(phys, "physical", "H"), "physical.H");
    c.phys.V = get_num(member(phys, "physical", "V"), "physical.V");

    const json& fam = member(j, "$", "family");
    c.family.family = get_int(member(fam, "family", "id"), "family.id");
    c.family.n = opt_int(fam, "family", "n", 1);
    c.family.P = opt_num(fam, "family", "P", 0.0);
    c.family.k_z = opt_num(fam, "family", "k_z", 0.0);
    c.family.K_r = opt_num(fam, "family", "K_r", 0.0);

    if (j.contains("modes")) {
        const json& modes = j.at("modes");
        if (!modes.is_array()) fail("modes", "expected an array");
        for (std::size_t i = 0; i < modes.size(); ++i) {
            c.modes.push_back(parse_mode(modes.at(i), "modes[" + std::to_string(i) + "]"));
        }
    }

    c.plan.seed = 0;
    if (j.contains("seed")) {
        const json& seed = j.at("seed");
        if (!seed.is_number_integer() || seed.get<long long>() < 0) {
            fail("seed", "expected a nonnegative integer");
        }
        c.plan.seed = seed.get<std::uint64_t>();
    }
    if (j.contains("plan")) {
        const json& plan = j.at("plan");
        c.plan.n_points = opt_int(plan, "plan", "n_points", c.plan.n_points);
        c.plan.fd_step = opt_num(plan, "plan", "fd_step", c.plan.fd_step);
        if (plan.contains("tolerances")) {
            const json& tol = plan.at("tolerances");
            const std::string tp = "plan.tolerances";
            c.plan.tol.analytic = opt_num(tol, tp, "analytic", c.plan.tol.analytic);
            c.plan.tol.fd = opt_num(tol, tp, "fd", c.plan.tol.fd);
            c.plan.tol.bc_boundary = opt_num(tol, tp, "bc_boundary", c.plan.tol.bc_boundary);
            c.plan.tol.bc_match = opt_num(tol, tp, "bc_match", c.plan.tol.bc_match);
            c.plan.tol.helmholtz = opt_num(tol, tp, "helmholtz", c.plan.tol.helmholtz);
        }
    }

    if (j.contains("grid")) {
        const json& grid = j.at("grid");
        c.has_grid = true;
        c.grid.nx = get_int(member(grid, "grid", "nx"), "grid.nx");
        c.grid.ny = get_int(member(grid, "grid", "ny"), "grid.ny");
        c.grid.nz = get_int(member(grid, "grid", "nz"), "grid.nz");
        get_range(member(grid, "grid", "x"), "grid.x", c.grid.x0, c.grid.x1);
        get_range(member(grid, "grid", "y"), "grid.y", c.grid.y0, c.grid.y1);
        get_range(member(grid, "grid", "z"), "grid.z", c.grid.z0, c.grid.z1);
        c.grid.t = opt_num(grid, "grid", "t", 0.0);
    }

    if (j.contains("sweep")) {
        const json& sweep = j.at("sweep");
        c.sweep.present = true;
        c.sweep.parameter = get_str(member(sweep, "sweep", "parameter"), "sweep.parameter");
        c.sweep.from = get_num(member(sweep, "sweep", "from"), "sweep.from");
        c.sweep.to = get_num(member(sweep, "sweep", "to"), "sweep.to");
        c.sweep.samples = get_int(member(sweep, "sweep", "samples"), "sweep.samples");
        c.sweep.output = opt_str(sweep, "sweep", "output", "");
    }

    if (j.contains("outputs")) {
        const json& outputs = j.at("outputs");
        c.outputs.report = opt_str(outputs, "outputs", "report", "");
        c.outputs.csv = opt_str(outputs, "outputs", "csv", "");
        c.outputs.vtk = opt_str(outputs, "outputs", "vtk", "");
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return parse_config(j);
}

HorizontalMode make_mode(const RunConfig& config, const ValidatedSpec& spec) {
    std::vector<ModePart> parts;
    for (const auto& m : config.modes) {
        if (m.type == "plane_wave") {
            parts.push_back(PlaneWave{m.amplitude, m.phase, m.direction});
        } else {
            if (m.m < 0) throw ConfigError("modes[].m: must be >= 0");
            parts.push_back(BesselVortex{m.m, m.amplitude, m.phase, m.center_s, m.center_y});
        }
    }
    return HorizontalMode(spec.kappa, std::move(parts));
}

nlohmann::json config_echo(const RunConfig& config) {
    nlohmann::json j;
    j["physical"] = {{"beta", config.phys.beta}, {"H", config.phys.H}, {"V", config.phys.V}};
    nlohmann::json fam;
    fam["id"] = config.family.family;
    if (config.family.family == 1) {
        fam["n"] = config.family.n;
        fam["P"] = config.family.P;
    } else {
        fam["k_z"] = config.family.k_z;
        fam["K_r"] = config.family.K_r;
    }
    j["family"] = fam;
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& m : config.modes) {
        nlohmann::json mj;
        mj["type"] = m.type;
        mj["amplitude"] = m.amplitude;
        mj["phase"] = m.phase;
        if (m.type == "plane_wave") {
            mj["direction"] = m.direction;
        } else {
            mj["m"] = m.m;
            mj["center"] = {m.center_s, m.center_y};
        }
        modes.push_back(mj);
    }
    j["modes"] = modes;
    j["seed"] = config.plan.seed;
    j["plan"] = {{"n_points", config.plan.n_points}, {"fd_step", config.plan.fd_step}};
    if (config.has_grid) {
        j["grid"] = {{"nx", config.grid.nx},
                     {"ny", config.grid.ny},
                     {"nz", config.grid.nz},
                     {"x", {config.grid.x0, config.grid.x1}},
                     {"y", {config.grid.y0, config.grid.y1}},
                     {"z", {config.grid.z0, config.grid.z1}},
                     {"t", config.grid.t}};
    }
    if (config.sweep.present) {
        j["sweep"] = {{"parameter", config.sweep.parameter},
                      {"from", config.sweep.from},
                      {"to", config.sweep.to},
                      {"samples", config.sweep.samples},
                      {"output", config.sweep.output}};
    }
    return j;
}

}  // namespace rossby
