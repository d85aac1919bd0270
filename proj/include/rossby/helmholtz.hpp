#pragma once

#include <variant>
#include <vector>

#include "rossby/errors.hpp"

namespace rossby {

// Value and all partial derivatives of F(s, y) through second order.
struct Jet2 {
    double F = 0.0;
    double F_s = 0.0;
    double F_y = 0.0;
    double F_ss = 0.0;
    double F_sy = 0.0;
    double F_yy = 0.0;
};

// F = amplitude * cos(kappa*(s*cos(direction) + y*sin(direction)) + phase)
struct PlaneWave {
    double amplitude = 1.0;
    double phase = 0.0;
    double direction = 0.0;
};

// F = amplitude * J_m(kappa*rho) * cos(m*chi + phase) about (s0, y0),
// rho/chi polar coordinates. Bounded at the center; no Y_m branch.
struct BesselVortex {
    int m = 0;
    double amplitude = 1.0;
    double phase = 0.0;
    double s0 = 0.0;
    double y0 = 0.0;
};

using ModePart = std::variant<PlaneWave, BesselVortex>;

// A horizontal structure function: superposition of elementary solutions of
// F_ss + F_yy + kappa^2 F = 0 at one shared kappa. An empty part list is the
// zero field (still carries its kappa).
class HorizontalMode {
public:
    HorizontalMode(double kappa, std::vector<ModePart> parts);

    double kappa() const { return kappa_; }
    const std::vector<ModePart>& parts() const { return parts_; }

    // sum of |amplitude| over parts; scale for normalized residuals
    double total_amplitude() const;

private:
    double kappa_ = 0.0;
    std::vector<ModePart> parts_;
};

HorizontalMode plane_wave(double kappa, double amplitude, double phase, double direction);

HorizontalMode bessel_vortex(double kappa, int m, double amplitude, double phase,
                             double s0 = 0.0, double y0 = 0.0);

// Flattens the given modes into one; all kappa must agree to 1e-12 relative.
// Throws MixedWavenumbers otherwise, BadParameter on an empty list.
HorizontalMode superpose(const std::vector<HorizontalMode>& modes);

// Analytic derivative jet of one part / of the whole mode.
Jet2 eval_jet(const ModePart& part, double kappa, double s, double y);
Jet2 eval_jet(const HorizontalMode& mode, double s, double y);

// |F_ss + F_yy + kappa^2 F| / (kappa^2 * (|F| + total amplitude))
double helmholtz_residual(const HorizontalMode& mode, double s, double y);

}  // namespace rossby
