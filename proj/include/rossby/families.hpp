#pragma once

#include "rossby/helmholtz.hpp"
#include "rossby/model.hpp"

namespace rossby {

// Value and first two z-derivatives of a vertical profile.
struct VerticalJet {
    double f = 0.0;
    double df = 0.0;
    double ddf = 0.0;
};

// Stream function and derived fields at one point.
struct StreamSample {
    double p = 0.0;    // stream function
    double u = 0.0;    // zonal velocity  = -dp/dy
    double v = 0.0;    // meridional velocity = dp/dx
    double p_z = 0.0;  // vertical derivative
};

// Assembled drifting solution p(t,x,y,z) = f(z) * F(x - V t, y) + g(z) * y.
class Solution {
public:
    // Throws WavenumberMismatch if mode.kappa differs from spec.kappa by
    // more than 1e-12 relative.
    Solution(ValidatedSpec spec, HorizontalMode mode);

    const ValidatedSpec& spec() const { return spec_; }
    const HorizontalMode& mode() const { return mode_; }
    const PhysicalParams& phys() const { return spec_.phys; }

private:
    ValidatedSpec spec_;
    HorizontalMode mode_;
};

// Resonance constant M of families 2-9; numerator and denominator are
// evaluated separately so the resonance guard can act before the division.
// Throws BadParameter for family 1 and ResonantDepth below tolerance.
MParts compute_M_parts(int family, double k_z, double K, double H);
double compute_M(const FamilySpec& spec, const PhysicalParams& phys);

// f(z): 1 (family 1), sin/cos(k_z z) (2, 3), sinh(k_z z) (4-6),
// cosh(k_z z) (7-9). Throws DomainError outside [0, H].
VerticalJet vertical_profile(const ValidatedSpec& spec, double z);

// g(z): the y-coefficient of the solution, with its first two z-derivatives.
// Throws DomainError outside [0, H].
VerticalJet zonal_coefficient(const ValidatedSpec& spec, double z);

Solution build_solution(const ValidatedSpec& spec, HorizontalMode mode);

// Cancellation-stable ingredients of the drift-frame Jacobian identity.
// g_plus_V and gamma = g'' + beta share one evaluation of the family's
// inner expression, so gamma = (sign) K^2 * g_plus_V holds to machine
// epsilon (gamma is exactly 0 for families 6 and 9). Assembling the same
// quantities from zonal_coefficient loses up to seven digits near small
// K z, where cos(K z) - 1 underflows against the M sin(K z) term.
struct StableZonal {
    double g_plus_V = 0.0;
    double gamma = 0.0;
};
StableZonal zonal_stable(const ValidatedSpec& spec, double z);

// f''(z) - kappa^2 f(z) in per-family closed form: -kappa^2 for family 1,
// -K^2 f for families 2-4 and 7, +K^2 f for 5 and 8, exactly 0 for 6
// and 9.
double laplacian_coefficient(const ValidatedSpec& spec, double f_value);

// Throws DomainError outside [0, H].
StreamSample eval(const Solution& sol, double t, double x, double y, double z);

// The boundary-condition operator evaluated on this solution via the
// family's closed-form expression (kept in its original grouping, not
// re-derived), as the reference for the numerically assembled operator.
double bc_closed_form(const Solution& sol, double t, double x, double y, double z);

}  // namespace rossby
