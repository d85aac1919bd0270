#include "rossby/kernels.hpp"

#if defined(ROSSBY_HAVE_AVX2)

#include <immintrin.h>

#include "detail.hpp"

namespace rossby::kernels {

namespace {

// Arithmetic is vectorized with plain mul/add (no FMA) so each lane rounds
// exactly like the scalar reference; sin/cos go through the same libm calls.
void plane_wave_row_avx2(const PlaneWaveRow& w, const double* s, std::size_t n, double* F,
                         double* F_s, double* F_y) {
    const __m256d ks = _mm256_set1_pd(w.ks);
    const __m256d c0 = _mm256_set1_pd(w.c0);
    const __m256d amp = _mm256_set1_pd(w.amp);
    const __m256d naks = _mm256_set1_pd(w.neg_amp_ks);
    const __m256d naky = _mm256_set1_pd(w.neg_amp_ky);

    const std::size_t n4 = n - n % 4;
    alignas(32) double theta[4], cs[4], sn[4];
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d vs = _mm256_loadu_pd(s + i);
        _mm256_store_pd(theta, _mm256_add_pd(_mm256_mul_pd(ks, vs), c0));
        for (int l = 0; l < 4; ++l) {
            cs[l] = std::cos(theta[l]);
            sn[l] = std::sin(theta[l]);
        }
        const __m256d vcs = _mm256_load_pd(cs);
        const __m256d vsn = _mm256_load_pd(sn);
        _mm256_storeu_pd(F + i, _mm256_add_pd(_mm256_loadu_pd(F + i), _mm256_mul_pd(amp, vcs)));
        _mm256_storeu_pd(F_s + i,
                         _mm256_add_pd(_mm256_loadu_pd(F_s + i), _mm256_mul_pd(naks, vsn)));
        _mm256_storeu_pd(F_y + i,
                         _mm256_add_pd(_mm256_loadu_pd(F_y + i), _mm256_mul_pd(naky, vsn)));
    }
    detail::plane_wave_row_range(w, s, n4, n, F, F_s, F_y);
}

void assemble_fields_avx2(const double* F, const double* F_s, const double* F_y, double f,
                          double df, double g, double dg, double y, std::size_t n, double* p,
                          double* u, double* v, double* p_z) {
    const double gy_s = g * y;
    const double dgy_s = dg * y;
    const __m256d vf = _mm256_set1_pd(f);
    const __m256d vdf = _mm256_set1_pd(df);
    const __m256d vg = _mm256_set1_pd(g);
    const __m256d vgy = _mm256_set1_pd(gy_s);
    const __m256d vdgy = _mm256_set1_pd(dgy_s);
    const __m256d negzero = _mm256_set1_pd(-0.0);

    const std::size_t n4 = n - n % 4;
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d vF = _mm256_loadu_pd(F + i);
        const __m256d vFs = _mm256_loadu_pd(F_s + i);
        const __m256d vFy = _mm256_loadu_pd(F_y + i);
        _mm256_storeu_pd(p + i, _mm256_add_pd(_mm256_mul_pd(vf, vF), vgy));
        _mm256_storeu_pd(
            u + i, _mm256_xor_pd(_mm256_add_pd(_mm256_mul_pd(vf, vFy), vg), negzero));
        _mm256_storeu_pd(v + i, _mm256_mul_pd(vf, vFs));
        _mm256_storeu_pd(p_z + i, _mm256_add_pd(_mm256_mul_pd(vdf, vF), vdgy));
    }
    detail::assemble_fields_range(F, F_s, F_y, f, df, g, dg, y, n4, n, p, u, v, p_z);
}

}  // namespace

const Backend* avx2_backend_impl() {
    static const Backend backend{"avx2", plane_wave_row_avx2, assemble_fields_avx2};
    return &backend;
}

}  // namespace rossby::kernels

#endif  // ROSSBY_HAVE_AVX2
