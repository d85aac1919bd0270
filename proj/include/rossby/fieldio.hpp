#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rossby/families.hpp"
#include "rossby/verify.hpp"

namespace rossby {

// Rectilinear evaluation grid at a fixed time.
struct GridSpec {
    int nx = 2, ny = 2, nz = 2;  // point counts, each >= 2
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
    double z0 = 0.0, z1 = 1.0;  // must lie within [0, H]
    double t = 0.0;
};

// Dense fields in x-fastest ordering: index(i,j,k) = i + nx*(j + ny*k).
struct FieldBlock {
    GridSpec grid;
    std::vector<double> xs, ys, zs;             // axis coordinates
    std::vector<double> p, u, v, p_z;           // nx*ny*nz each
    ValidatedSpec spec;                         // provenance echo

    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(grid.nx) *
                   (static_cast<std::size_t>(j) +
                    static_cast<std::size_t>(grid.ny) * static_cast<std::size_t>(k));
    }
};

// Throws DomainError when the z-range leaves [0, H] or counts are < 2.
FieldBlock sample_grid(const Solution& sol, const GridSpec& grid);

// header x,y,z,p,u,v,p_z; one row per point in index order; 17 significant
// digits so doubles round-trip exactly; LF newlines. Throws IoError.
void export_csv(const FieldBlock& block, const std::string& path);

// Legacy ASCII VTK rectilinear grid with point data p, p_z and the planar
// velocity as a 3-vector (u, v, 0). Throws IoError.
void export_vtk(const FieldBlock& block, const std::string& path);

nlohmann::json report_to_json(const VerificationReport& report);

// Structured JSON report: residual statistics, tolerances, pass flags,
// spec echo, seed. Optional config echo is embedded verbatim.
void write_report(const VerificationReport& report, const std::string& path);
void write_report(const VerificationReport& report, const nlohmann::json& config_echo,
                  const std::string& path);

}  // namespace rossby
