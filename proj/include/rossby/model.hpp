#pragma once

#include <cstdint>

#include "rossby/errors.hpp"

namespace rossby {

// Global nondimensional constants of the Charney-Obukhov model.
struct PhysicalParams {
    double beta = 1.0;  // meridional gradient of the Coriolis parameter
    double H = 1.0;     // ocean depth, 0 <= z <= H
    double V = 0.0;     // zonal drift speed (0 gives steady solutions)
};

// Free parameters of one of the nine solution families.
//
//   family 1      : n (integer >= 1), P (any real)
//   families 2..9 : k_z; K_r additionally for families 2-5, 7, 8
struct FamilySpec {
    int family = 1;
    int n = 1;
    double P = 0.0;
    double k_z = 0.0;
    double K_r = 0.0;
};

// Numerator/denominator of the resonance constant M, kept separate so the
// resonance guard can inspect the denominator before dividing.
struct MParts {
    double num = 0.0;
    double den = 0.0;
};

// FamilySpec with its derived constants populated. Produced by validate();
// fields are plain data so diagnostic harnesses can perturb them on purpose.
struct ValidatedSpec {
    FamilySpec base;
    PhysicalParams phys;
    double kappa = 0.0;  // horizontal Helmholtz wavenumber of F
    double K = 0.0;      // auxiliary wavenumber (families 2-5, 7, 8)
    double M = 0.0;      // resonance constant (families 2-9)
    bool has_K = false;
    bool has_M = false;
};

// Reject when |den| < kResonanceTol * (|num| + 1): M would be numerically
// meaningless there and poisons every residual check downstream.
inline constexpr double kResonanceTol = 1e-9;

// Hyperbolic profiles overflow double precision near k_z*H ~ 700 and the M
// formulas degenerate to 0*inf well before that.
inline constexpr double kMaxHyperbolicArg = 300.0;

// Checks all family constraints and populates kappa, K, M.
// Throws BadParameter, ConstraintViolation or ResonantDepth.
ValidatedSpec validate(const FamilySpec& spec, const PhysicalParams& phys);

// kappa rule: pi*n/H (family 1), |K_r| (families 2-5, 7, 8), |k_z| (6, 9).
double horizontal_wavenumber(const FamilySpec& spec, const PhysicalParams& phys);

// Auxiliary wavenumber K > 0 for families 2-5, 7, 8 (0 for families
// without one). Throws ConstraintViolation where the family inequality
// between k_z and K_r fails.
double auxiliary_wavenumber(const FamilySpec& spec);

}  // namespace rossby
