#include "detail.hpp"
#include "rossby/kernels.hpp"

namespace rossby::kernels {

namespace {

void plane_wave_row_scalar(const PlaneWaveRow& w, const double* s, std::size_t n, double* F,
                           double* F_s, double* F_y) {
    detail::plane_wave_row_range(w, s, 0, n, F, F_s, F_y);
}

void assemble_fields_scalar(const double* F, const double* F_s, const double* F_y, double f,
                            double df, double g, double dg, double y, std::size_t n,
                            double* p, double* u, double* v, double* p_z) {
    detail::assemble_fields_range(F, F_s, F_y, f, df, g, dg, y, 0, n, p, u, v, p_z);
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", plane_wave_row_scalar, assemble_fields_scalar};
    return backend;
}

}  // namespace rossby::kernels
