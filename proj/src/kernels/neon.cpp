#include "rossby/kernels.hpp"

#if defined(ROSSBY_HAVE_NEON)

#include <arm_neon.h>

#include "detail.hpp"

namespace rossby::kernels {

namespace {

void plane_wave_row_neon(const PlaneWaveRow& w, const double* s, std::size_t n, double* F,
                         double* F_s, double* F_y) {
    const float64x2_t ks = vdupq_n_f64(w.ks);
    const float64x2_t c0 = vdupq_n_f64(w.c0);
    const float64x2_t amp = vdupq_n_f64(w.amp);
    const float64x2_t naks = vdupq_n_f64(w.neg_amp_ks);
    const float64x2_t naky = vdupq_n_f64(w.neg_amp_ky);

    const std::size_t n2 = n - n % 2;
    double theta[2], cs[2], sn[2];
    for (std::size_t i = 0; i < n2; i += 2) {
        vst1q_f64(theta, vaddq_f64(vmulq_f64(ks, vld1q_f64(s + i)), c0));
        for (int l = 0; l < 2; ++l) {
            cs[l] = std::cos(theta[l]);
            sn[l] = std::sin(theta[l]);
        }
        const float64x2_t vcs = vld1q_f64(cs);
        const float64x2_t vsn = vld1q_f64(sn);
        vst1q_f64(F + i, vaddq_f64(vld1q_f64(F + i), vmulq_f64(amp, vcs)));
        vst1q_f64(F_s + i, vaddq_f64(vld1q_f64(F_s + i), vmulq_f64(naks, vsn)));
        vst1q_f64(F_y + i, vaddq_f64(vld1q_f64(F_y + i), vmulq_f64(naky, vsn)));
    }
    detail::plane_wave_row_range(w, s, n2, n, F, F_s, F_y);
}

void assemble_fields_neon(const double* F, const double* F_s, const double* F_y, double f,
                          double df, double g, double dg, double y, std::size_t n, double* p,
                          double* u, double* v, double* p_z) {
    const float64x2_t vf = vdupq_n_f64(f);
    const float64x2_t vdf = vdupq_n_f64(df);
    const float64x2_t vg = vdupq_n_f64(g);
    const float64x2_t vgy = vdupq_n_f64(g * y);
    const float64x2_t vdgy = vdupq_n_f64(dg * y);

    const std::size_t n2 = n - n % 2;
    for (std::size_t i = 0; i < n2; i += 2) {
        const float64x2_t vF = vld1q_f64(F + i);
        const float64x2_t vFs = vld1q_f64(F_s + i);
        const float64x2_t vFy = vld1q_f64(F_y + i);
        vst1q_f64(p + i, vaddq_f64(vmulq_f64(vf, vF), vgy));
        vst1q_f64(u + i, vnegq_f64(vaddq_f64(vmulq_f64(vf, vFy), vg)));
        vst1q_f64(v + i, vmulq_f64(vf, vFs));
        vst1q_f64(p_z + i, vaddq_f64(vmulq_f64(vdf, vF), vdgy));
    }
    detail::assemble_fields_range(F, F_s, F_y, f, df, g, dg, y, n2, n, p, u, v, p_z);
}

}  // namespace

const Backend* neon_backend_impl() {
    static const Backend backend{"neon", plane_wave_row_neon, assemble_fields_neon};
    return &backend;
}

}  // namespace rossby::kernels

#endif  // ROSSBY_HAVE_NEON
