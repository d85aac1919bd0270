#pragma once

#include <cstddef>

namespace rossby::kernels {

// Per-row constants of one plane-wave part: theta_i = ks*s_i + c0 with
// c0 = ky*y + phase folded in per row.
struct PlaneWaveRow {
    double amp = 0.0;
    double ks = 0.0;
    double ky = 0.0;
    double c0 = 0.0;
    double neg_amp_ks = 0.0;
    double neg_amp_ky = 0.0;
};

// Accumulates one plane wave's jets over a row of drift coordinates:
//   F += amp*cos(theta), F_s += -amp*ks*sin(theta), F_y += -amp*ky*sin(theta)
using PlaneWaveRowFn = void (*)(const PlaneWaveRow& w, const double* s, std::size_t n,
                                double* F, double* F_s, double* F_y);

// Assembles field rows from jet rows and per-slab vertical profile values:
//   p = f*F + g*y, u = -(f*F_y + g), v = f*F_s, p_z = df*F + dg*y
using AssembleFieldsFn = void (*)(const double* F, const double* F_s, const double* F_y,
                                  double f, double df, double g, double dg, double y,
                                  std::size_t n, double* p, double* u, double* v,
                                  double* p_z);

struct Backend {
    const char* name = "";
    PlaneWaveRowFn plane_wave_row = nullptr;
    AssembleFieldsFn assemble_fields = nullptr;
};

// Reference implementation; always available. SIMD variants reproduce it
// bit for bit (same operation order, no FMA contraction, shared scalar
// transcendentals), which the equivalence tests assert literally.
const Backend& scalar_backend();

// SIMD variants; nullptr when not compiled in or not supported by this CPU.
const Backend* avx2_backend();
const Backend* neon_backend();

// Selected once at first use: best available SIMD variant, else scalar.
// Overridable with ROSSBY_KERNEL=scalar|avx2|neon (unknown or unavailable
// names fall back to scalar) or force_backend() for tests.
const Backend& active_backend();
void force_backend(const Backend* backend);  // nullptr restores detection

}  // namespace rossby::kernels
