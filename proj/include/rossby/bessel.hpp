#pragma once

namespace rossby {

struct BesselJ {
    double value = 0.0;
    double deriv = 0.0;
};

// Bessel function of the first kind J_m(x) and its derivative J_m'(x).
//
// Ascending power series for small |x|, backward (Miller) recurrence with
// J-normalization for large |x|. Supported envelope: 0 <= m <= 50,
// |x| <= 1e4; relative accuracy ~1e-13 away from zeros of J_m.
// Throws OutOfEnvelope beyond the supported range.
BesselJ bessel_j(int m, double x);

}  // namespace rossby
