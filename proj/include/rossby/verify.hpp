#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rossby/families.hpp"

namespace rossby {

struct Tolerances {
    double analytic = 1e-10;     // PDE residual, analytic Jacobian route
    double fd = 1e-5;            // PDE residual, finite-difference route
    double bc_boundary = 1e-12;  // BC operator at z = 0 and z = H
    double bc_match = 1e-9;      // closed form vs numeric BC at interior z
    double helmholtz = 1e-10;    // mode self-check
};

struct SamplingPlan {
    int n_points = 1000;    // random probe points; z stratified 25/25/50
    std::uint64_t seed = 0;
    double fd_step = 1e-3;  // relative step, scaled per axis by (1 + |coord|)
    Tolerances tol;
};

struct CheckStats {
    std::string name;
    double max = 0.0;
    double mean = 0.0;
    double tol = 0.0;
    bool pass = false;
    long count = 0;
};

struct VerificationReport {
    std::vector<CheckStats> checks;  // pde_analytic, pde_fd, bc_bottom,
                                     // bc_lid, bc_interior_match, helmholtz
    bool pass = false;
    ValidatedSpec spec;
    SamplingPlan plan;

    const CheckStats& check(const std::string& name) const;
};

// Scalar field p(t, x, y, z); the FD route differentiates this directly so
// it certifies whatever field it is handed, not just library solutions.
using ScalarField = std::function<double(double, double, double, double)>;

// Drift-frame Jacobian form of the PDE: with A = p + V y and
// B = laplacian(p) + beta y, residual = |J(A, B)| normalized by
// (|A_s| + |A_y|) * (|B_s| + |B_y|). Uses analytic jets only.
double pde_residual_analytic(const Solution& sol, double t, double x, double y, double z);

// All terms of the PDE assembled from finite differences of p alone;
// centered stencils at per-axis steps derived from `step`, one-sided in z
// near the boundaries, normalized by the sum of term magnitudes. Points
// where every term sits below the stencil roundoff bound report 0: the
// route cannot distinguish them from an exact zero.
double pde_residual_fd(const ScalarField& p, double H, double beta, double t, double x,
                       double y, double z, double step);
double pde_residual_fd(const Solution& sol, double t, double x, double y, double z,
                       double step);

// Boundary-condition operator assembled from analytic jets, lab-frame
// grouping (time derivative via -V d/ds) and drift-frame Jacobian grouping.
double bc_operator_lab(const Solution& sol, double t, double x, double y, double z);
double bc_operator_drift(const Solution& sol, double t, double x, double y, double z);

// |lab-frame BC operator| normalized by its term magnitudes.
double bc_residual(const Solution& sol, double t, double x, double y, double z);

// |numeric - closed form| normalized by the operator's natural magnitude
// |F_s| * (|f g'| + |(g + V) f'|).
double bc_match_residual(const Solution& sol, double t, double x, double y, double z);

// Runs every check over the plan's probe points. Deterministic given seed.
// Throws BadParameter on an invalid plan.
VerificationReport verify_solution(const Solution& sol, const SamplingPlan& plan);

}  // namespace rossby
