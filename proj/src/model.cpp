#include "rossby/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rossby/families.hpp"

namespace rossby {

namespace {

void check_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw BadParameter(std::string(name) + " must be finite");
    }
}

bool uses_K_r(int family) {
    return family == 2 || family == 3 || family == 4 || family == 5 || family == 7 ||
           family == 8;
}

bool is_hyperbolic(int family) { return family >= 4; }

}  // namespace

// Positive root by convention; the sign is immaterial by the parity
// structure of the profiles.
double auxiliary_wavenumber(const FamilySpec& spec) {
    const double a = std::fabs(spec.k_z);
    const double b = std::fabs(spec.K_r);
    switch (spec.family) {
        case 2:
        case 3:
            return std::hypot(spec.k_z, spec.K_r);  // K^2 = k_z^2 + K_r^2
        case 4:
        case 7:
            // K^2 = -k_z^2 + K_r^2, requires k_z < K_r
            if (!(a < b)) {
                throw ConstraintViolation("family " + std::to_string(spec.family) +
                                          " requires k_z < K_r");
            }
            return std::sqrt((b - a) * (b + a));
        case 5:
        case 8:
            // K^2 = k_z^2 - K_r^2, requires k_z > K_r
            if (!(a > b)) {
                throw ConstraintViolation("family " + std::to_string(spec.family) +
                                          " requires k_z > K_r");
            }
            return std::sqrt((a - b) * (a + b));
        default:
            return 0.0;
    }
}

double horizontal_wavenumber(const FamilySpec& spec, const PhysicalParams& phys) {
    switch (spec.family) {
        case 1:
            return std::numbers::pi * static_cast<double>(spec.n) / phys.H;
        case 6:
        case 9:
            return std::fabs(spec.k_z);
        default:
            return std::fabs(spec.K_r);
    }
}

ValidatedSpec validate(const FamilySpec& spec, const PhysicalParams& phys) {
    check_finite(phys.beta, "beta");
    check_finite(phys.H, "H");
    check_finite(phys.V, "V");
    if (!(phys.H > 0.0)) {
        throw BadParameter("H must be > 0");
    }
    if (spec.family < 1 || spec.family > 9) {
        throw BadParameter("family must be in 1..9");
    }

    ValidatedSpec out;
    out.base = spec;
    out.phys = phys;

    if (spec.family == 1) {
        if (spec.n < 1) {
            throw BadParameter("n must be a positive integer");
        }
        check_finite(spec.P, "P");
        out.kappa = horizontal_wavenumber(spec, phys);
        return out;
    }

    check_finite(spec.k_z, "k_z");
    if (uses_K_r(spec.family)) {
        check_finite(spec.K_r, "K_r");
        if (spec.K_r == 0.0) {
            throw BadParameter("K_r = 0 not allowed for family " +
                               std::to_string(spec.family));
        }
    }
    if ((spec.family == 6 || spec.family == 9) && spec.k_z == 0.0) {
        throw BadParameter("k_z = 0 not allowed for family " + std::to_string(spec.family));
    }
    if (is_hyperbolic(spec.family) && std::fabs(spec.k_z) * phys.H > kMaxHyperbolicArg) {
        throw BadParameter("k_z * H exceeds the hyperbolic range (" +
                           std::to_string(kMaxHyperbolicArg) + ")");
    }

    if (uses_K_r(spec.family)) {
        out.K = auxiliary_wavenumber(spec);
        out.has_K = true;
    }
    out.kappa = horizontal_wavenumber(spec, phys);

    const MParts parts = compute_M_parts(spec.family, spec.k_z, out.K, phys.H);
    if (std::fabs(parts.den) < kResonanceTol * (std::fabs(parts.num) + 1.0)) {
        throw ResonantDepth("M denominator " + std::to_string(parts.den) +
                            " below tolerance for family " + std::to_string(spec.family));
    }
    out.M = parts.num / parts.den;
    out.has_M = true;
    return out;
}

}  // namespace rossby
