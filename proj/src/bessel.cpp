#include "rossby/bessel.hpp"

#include <cmath>
#include <string>

#include "rossby/errors.hpp"

namespace rossby {

namespace {

constexpr double kMaxX = 1e4;
constexpr int kMaxOrder = 50;
constexpr double kSeriesCutover = 12.0;

// Ascending series J_m(x) = sum_k (-1)^k (x/2)^{m+2k} / (k! (m+k)!).
// Alternating with fast decay for x <= the cutover; no cancellation trouble.
double series_j(int m, double x) {
    const double u = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= m; ++i) {
        term *= u / static_cast<double>(i);
    }
    double sum = term;
    double peak = std::fabs(term);
    const double u2 = u * u;
    for (int k = 1; k <= 220; ++k) {
        term *= -u2 / (static_cast<double>(k) * static_cast<double>(m + k));
        sum += term;
        peak = std::max(peak, std::fabs(term));
        if (std::fabs(term) <= 1e-18 * peak + 1e-300) {
            break;
        }
    }
    return sum;
}

BesselJ series_pair(int m, double x) {
    BesselJ out;
    out.value = series_j(m, x);
    if (m == 0) {
        out.deriv = -series_j(1, x);
    } else {
        out.deriv = 0.5 * (series_j(m - 1, x) - series_j(m + 1, x));
    }
    return out;
}

// Backward (Miller) recurrence f_{k-1} = (2k/x) f_k - f_{k+1} from a start
// index above the turning point, normalized via J_0 + 2 sum J_{2k} = 1.
BesselJ miller_pair(int m, double x) {
    int start = static_cast<int>(std::max(static_cast<double>(m), x) +
                                 22.0 * std::cbrt(std::max(x, 1.0)) + 20.0);
    double f_next = 0.0;      // f_{k+1}
    double f_cur = 1e-280;    // f_start
    double fm = 0.0, fm_lo = 0.0, fm_hi = 0.0;
    double norm = 0.0;
    for (int k = start; k >= 0; --k) {
        if (k == m) fm = f_cur;
        if (k == m - 1) fm_lo = f_cur;
        if (k == m + 1) fm_hi = f_cur;
        norm += (k == 0) ? f_cur : (k % 2 == 0 ? 2.0 * f_cur : 0.0);
        if (k > 0) {
            const double f_prev = (2.0 * static_cast<double>(k) / x) * f_cur - f_next;
            f_next = f_cur;
            f_cur = f_prev;
            if (std::fabs(f_cur) > 1e250) {
                constexpr double s = 1e-250;
                f_cur *= s;
                f_next *= s;
                norm *= s;
                fm *= s;
                fm_lo *= s;
                fm_hi *= s;
            }
        }
    }
    const double scale = 1.0 / norm;
    BesselJ out;
    out.value = fm * scale;
    out.deriv = (m == 0) ? -(fm_hi * scale) : 0.5 * (fm_lo - fm_hi) * scale;
    return out;
}

}  // namespace

BesselJ bessel_j(int m, double x) {
    if (m < 0 || m > kMaxOrder) {
        throw OutOfEnvelope("bessel_j order " + std::to_string(m) + " outside 0.." +
                            std::to_string(kMaxOrder));
    }
    if (!(std::fabs(x) <= kMaxX)) {
        throw OutOfEnvelope("bessel_j argument " + std::to_string(x) +
                            " outside |x| <= " + std::to_string(kMaxX));
    }
    const double ax = std::fabs(x);
    BesselJ r = (ax <= kSeriesCutover) ? series_pair(m, ax) : miller_pair(m, ax);
    if (x < 0.0) {
        // J_m(-x) = (-1)^m J_m(x)
        if (m % 2 == 1) r.value = -r.value;
        if (m % 2 == 0) r.deriv = -r.deriv;
    }
    return r;
}

}  // namespace rossby
