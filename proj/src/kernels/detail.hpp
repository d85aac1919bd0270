#pragma once

#include <cmath>
#include <cstddef>

#include "rossby/kernels.hpp"

// Per-element reference operations. The SIMD backends call these for loop
// tails, so scalar/SIMD equivalence is structural, not coincidental.

namespace rossby::kernels::detail {

inline void plane_wave_row_range(const PlaneWaveRow& w, const double* s, std::size_t lo,
                                 std::size_t hi, double* F, double* F_s, double* F_y) {
    for (std::size_t i = lo; i < hi; ++i) {
        const double theta = w.ks * s[i] + w.c0;
        const double cs = std::cos(theta);
        const double sn = std::sin(theta);
        F[i] += w.amp * cs;
        F_s[i] += w.neg_amp_ks * sn;
        F_y[i] += w.neg_amp_ky * sn;
    }
}

inline void assemble_fields_range(const double* F, const double* F_s, const double* F_y,
                                  double f, double df, double g, double dg, double y,
                                  std::size_t lo, std::size_t hi, double* p, double* u,
                                  double* v, double* p_z) {
    const double gy = g * y;
    const double dgy = dg * y;
    for (std::size_t i = lo; i < hi; ++i) {
        p[i] = f * F[i] + gy;
        u[i] = -(f * F_y[i] + g);
        v[i] = f * F_s[i];
        p_z[i] = df * F[i] + dgy;
    }
}

}  // namespace rossby::kernels::detail
