#include "rossby/fieldio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "rossby/kernels.hpp"

namespace rossby {

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    const double d = (b - a) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = a + static_cast<double>(i) * d;
    }
    v.back() = b;
    return v;
}

void check_grid(const GridSpec& grid, double H) {
    if (grid.nx < 2 || grid.ny < 2 || grid.nz < 2) {
        throw DomainError("grid needs at least 2 points per axis");
    }
    if (!(grid.x0 < grid.x1) || !(grid.y0 < grid.y1) || !(grid.z0 < grid.z1)) {
        throw DomainError("grid ranges must be nonempty");
    }
    if (!(grid.z0 >= 0.0 && grid.z1 <= H)) {
        throw DomainError("grid z-range [" + std::to_string(grid.z0) + ", " +
                          std::to_string(grid.z1) + "] outside [0, " + std::to_string(H) +
                          "]");
    }
    if (!std::isfinite(grid.t)) {
        throw DomainError("grid t must be finite");
    }
}

std::ofstream open_out(const std::string& path) {
    if (path.empty()) {
        throw IoError("empty output path");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw IoError("write failed for '" + path + "'");
    }
}

// shortest text that round-trips a double exactly
std::string num17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

FieldBlock sample_grid(const Solution& sol, const GridSpec& grid) {
    const ValidatedSpec& spec = sol.spec();
    check_grid(grid, spec.phys.H);

    FieldBlock block;
    block.grid = grid;
    block.spec = spec;
    block.xs = linspace(grid.x0, grid.x1, grid.nx);
    block.ys = linspace(grid.y0, grid.y1, grid.ny);
    block.zs = linspace(grid.z0, grid.z1, grid.nz);

    const std::size_t nx = static_cast<std::size_t>(grid.nx);
    const std::size_t ny = static_cast<std::size_t>(grid.ny);
    const std::size_t nz = static_cast<std::size_t>(grid.nz);
    const std::size_t total = nx * ny * nz;
    block.p.resize(total);
    block.u.resize(total);
    block.v.resize(total);
    block.p_z.resize(total);

    // drift coordinates of the x axis
    std::vector<double> s(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        s[i] = block.xs[i] - spec.phys.V * grid.t;
    }

    // horizontal jets over the (x, y) plane; z-independent
    const auto& backend = kernels::active_backend();
    std::vector<double> F(nx * ny, 0.0), F_s(nx * ny, 0.0), F_y(nx * ny, 0.0);
    for (std::size_t j = 0; j < ny; ++j) {
        const double y = block.ys[j];
        double* rowF = F.data() + j * nx;
        double* rowFs = F_s.data() + j * nx;
        double* rowFy = F_y.data() + j * nx;
        for (const auto& part : sol.mode().parts()) {
            if (const auto* w = std::get_if<PlaneWave>(&part)) {
                kernels::PlaneWaveRow row;
                row.amp = w->amplitude;
                row.ks = sol.mode().kappa() * std::cos(w->direction);
                row.ky = sol.mode().kappa() * std::sin(w->direction);
                row.c0 = row.ky * y + w->phase;
                row.neg_amp_ks = -w->amplitude * row.ks;
                row.neg_amp_ky = -w->amplitude * row.ky;
                backend.plane_wave_row(row, s.data(), nx, rowF, rowFs, rowFy);
            } else {
                // Bessel recurrences are branchy per point; stays scalar.
                for (std::size_t i = 0; i < nx; ++i) {
                    const Jet2 jt = eval_jet(part, sol.mode().kappa(), s[i], y);
                    rowF[i] += jt.F;
                    rowFs[i] += jt.F_s;
                    rowFy[i] += jt.F_y;
                }
            }
        }
    }

    for (std::size_t k = 0; k < nz; ++k) {
        const VerticalJet f = vertical_profile(spec, block.zs[k]);
        const VerticalJet g = zonal_coefficient(spec, block.zs[k]);
        for (std::size_t j = 0; j < ny; ++j) {
            const std::size_t off = nx * (j + ny * k);
            backend.assemble_fields(F.data() + j * nx, F_s.data() + j * nx,
                                    F_y.data() + j * nx, f.f, f.df, g.f, g.df, block.ys[j],
                                    nx, block.p.data() + off, block.u.data() + off,
                                    block.v.data() + off, block.p_z.data() + off);
        }
    }
    return block;
}

void export_csv(const FieldBlock& block, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "x,y,z,p,u,v,p_z\n";
    for (int k = 0; k < block.grid.nz; ++k) {
        for (int j = 0; j < block.grid.ny; ++j) {
            for (int i = 0; i < block.grid.nx; ++i) {
                const std::size_t idx = block.index(i, j, k);
                out << num17(block.xs[static_cast<std::size_t>(i)]) << ','
                    << num17(block.ys[static_cast<std::size_t>(j)]) << ','
                    << num17(block.zs[static_cast<std::size_t>(k)]) << ','
                    << num17(block.p[idx]) << ',' << num17(block.u[idx]) << ','
                    << num17(block.v[idx]) << ',' << num17(block.p_z[idx]) << '\n';
            }
        }
    }
    finish_out(out, path);
}

void export_vtk(const FieldBlock& block, const std::string& path) {
    std::ofstream out = open_out(path);
    const std::size_t total = block.p.size();
    out << "# vtk DataFile Version 3.0\n";
    out << "rossby stream function fields, family " << block.spec.base.family << "\n";
    out << "ASCII\n";
    out << "DATASET RECTILINEAR_GRID\n";
    out << "DIMENSIONS " << block.grid.nx << ' ' << block.grid.ny << ' ' << block.grid.nz
        << "\n";
    auto coords = [&](const char* label, const std::vector<double>& cs) {
        out << label << ' ' << cs.size() << " double\n";
        for (std::size_t i = 0; i < cs.size(); ++i) {
            out << num17(cs[i]) << (i + 1 == cs.size() ? '\n' : ' ');
        }
    };
    coords("X_COORDINATES", block.xs);
    coords("Y_COORDINATES", block.ys);
    coords("Z_COORDINATES", block.zs);
    out << "POINT_DATA " << total << "\n";
    auto scalars = [&](const char* name, const std::vector<double>& vs) {
        out << "SCALARS " << name << " double 1\n";
        out << "LOOKUP_TABLE default\n";
        for (double v : vs) out << num17(v) << '\n';
    };
    scalars("p", block.p);
    scalars("p_z", block.p_z);
    out << "VECTORS velocity double\n";
    for (std::size_t i = 0; i < total; ++i) {
        out << num17(block.u[i]) << ' ' << num17(block.v[i]) << " 0\n";
    }
    finish_out(out, path);
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    const ValidatedSpec& spec = report.spec;
    j["family"] = spec.base.family;
    nlohmann::json params;
    if (spec.base.family == 1) {
        params["n"] = spec.base.n;
        params["P"] = spec.base.P;
    } else {
        params["k_z"] = spec.base.k_z;
        if (spec.has_K) params["K_r"] = spec.base.K_r;
    }
    j["parameters"] = params;
    nlohmann::json derived;
    derived["kappa"] = spec.kappa;
    if (spec.has_K) derived["K"] = spec.K;
    if (spec.has_M) derived["M"] = spec.M;
    j["derived"] = derived;
    j["physical"] = {{"beta", spec.phys.beta}, {"H", spec.phys.H}, {"V", spec.phys.V}};
    j["plan"] = {{"n_points", report.plan.n_points},
                 {"seed", report.plan.seed},
                 {"fd_step", report.plan.fd_step},
                 {"tolerances",
                  {{"analytic", report.plan.tol.analytic},
                   {"fd", report.plan.tol.fd},
                   {"bc_boundary", report.plan.tol.bc_boundary},
                   {"bc_match", report.plan.tol.bc_match},
                   {"helmholtz", report.plan.tol.helmholtz}}}};
    nlohmann::json checks;
    for (const auto& c : report.checks) {
        checks[c.name] = {{"max", c.max},
                          {"mean", c.mean},
                          {"tolerance", c.tol},
                          {"pass", c.pass},
                          {"count", c.count}};
    }
    j["checks"] = checks;
    j["pass"] = report.pass;
    return j;
}

void write_report(const VerificationReport& report, const std::string& path) {
    write_report(report, nlohmann::json(), path);
}

void write_report(const VerificationReport& report, const nlohmann::json& config_echo,
                  const std::string& path) {
    nlohmann::json j = report_to_json(report);
    if (!config_echo.is_null()) {
        j["config"] = config_echo;
    }
    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
    finish_out(out, path);
}

}  // namespace rossby
