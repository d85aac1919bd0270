#include "rossby/helmholtz.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "rossby/bessel.hpp"

namespace rossby {

namespace {

// Polar second derivatives lose ~eps/rho accuracy near the center; below
// kappa*rho = kCenterSwitch the Cartesian-harmonic series of
// J_m(kappa rho) cos(m chi + phase) is used instead (entire, exact jets).
constexpr double kCenterSwitch = 1e-2;

struct JetAlgebra {
    // product rule through second order
    static Jet2 mul(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.F = a.F * b.F;
        r.F_s = a.F_s * b.F + a.F * b.F_s;
        r.F_y = a.F_y * b.F + a.F * b.F_y;
        r.F_ss = a.F_ss * b.F + 2.0 * a.F_s * b.F_s + a.F * b.F_ss;
        r.F_sy = a.F_sy * b.F + a.F_s * b.F_y + a.F_y * b.F_s + a.F * b.F_sy;
        r.F_yy = a.F_yy * b.F + 2.0 * a.F_y * b.F_y + a.F * b.F_yy;
        return r;
    }

    static Jet2 axpy(double c, const Jet2& a, const Jet2& acc) {
        Jet2 r = acc;
        r.F += c * a.F;
        r.F_s += c * a.F_s;
        r.F_y += c * a.F_y;
        r.F_ss += c * a.F_ss;
        r.F_sy += c * a.F_sy;
        r.F_yy += c * a.F_yy;
        return r;
    }
};

Jet2 plane_wave_jet(const PlaneWave& w, double kappa, double s, double y) {
    const double ks = kappa * std::cos(w.direction);
    const double ky = kappa * std::sin(w.direction);
    const double theta = ks * s + ky * y + w.phase;
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    Jet2 j;
    j.F = w.amplitude * c;
    j.F_s = -w.amplitude * ks * sn;
    j.F_y = -w.amplitude * ky * sn;
    j.F_ss = -w.amplitude * ks * ks * c;
    j.F_sy = -w.amplitude * ks * ky * c;
    j.F_yy = -w.amplitude * ky * ky * c;
    return j;
}

// Jet of the harmonic polynomial Re/Im[(u + i v)^m] from complex powers.
struct HarmonicJets {
    Jet2 re;
    Jet2 im;
};

HarmonicJets harmonic_jets(int m, double u, double v) {
    const std::complex<double> zc(u, v);
    auto ipow = [&zc](int e) {
        std::complex<double> r(1.0, 0.0);
        for (int i = 0; i < e; ++i) r *= zc;
        return r;
    };
    const std::complex<double> z1 = ipow(m);
    const std::complex<double> z2 = (m >= 1) ? ipow(m - 1) : std::complex<double>(0.0);
    const std::complex<double> z3 = (m >= 2) ? ipow(m - 2) : std::complex<double>(0.0);
    const double dm = static_cast<double>(m);
    const double dmm = dm * (dm - 1.0);
    HarmonicJets h;
    h.re.F = z1.real();
    h.re.F_s = dm * z2.real();
    h.re.F_y = -dm * z2.imag();
    h.re.F_ss = dmm * z3.real();
    h.re.F_sy = -dmm * z3.imag();
    h.re.F_yy = -dmm * z3.real();
    h.im.F = z1.imag();
    h.im.F_s = dm * z2.imag();
    h.im.F_y = dm * z2.real();
    h.im.F_ss = dmm * z3.imag();
    h.im.F_sy = dmm * z3.real();
    h.im.F_yy = -dmm * z3.imag();
    return h;
}

// Near-center branch: J_m(kappa rho) cos(m chi + phase) expanded as
// sum_k c_k (u^2 + v^2)^k [cos(phase) P_m - sin(phase) Q_m],
// c_k = (-1)^k (kappa/2)^{m+2k} / (k! (m+k)!). Seven terms leave a
// truncation below 1e-26 for kappa*rho < 1e-2.
Jet2 vortex_center_jet(const BesselVortex& vx, double kappa, double u, double v) {
    const HarmonicJets h = harmonic_jets(vx.m, u, v);
    const double cp = std::cos(vx.phase);
    const double sp = std::sin(vx.phase);
    Jet2 base;  // cos(phase) P_m - sin(phase) Q_m
    base = JetAlgebra::axpy(cp, h.re, base);
    base = JetAlgebra::axpy(-sp, h.im, base);

    Jet2 r2;  // u^2 + v^2 with exact polynomial jet
    r2.F = u * u + v * v;
    r2.F_s = 2.0 * u;
    r2.F_y = 2.0 * v;
    r2.F_ss = 2.0;
    r2.F_yy = 2.0;

    // c_0 = (kappa/2)^m / m!
    double coeff = 1.0;
    for (int i = 1; i <= vx.m; ++i) {
        coeff *= 0.5 * kappa / static_cast<double>(i);
    }
    Jet2 acc;
    Jet2 pow_r2 = base;  // base * (r2)^k, built incrementally
    const double k2q = 0.25 * kappa * kappa;
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) {
            coeff *= -k2q / (static_cast<double>(k) * static_cast<double>(vx.m + k));
            pow_r2 = JetAlgebra::mul(pow_r2, r2);
        }
        acc = JetAlgebra::axpy(coeff, pow_r2, acc);
    }
    Jet2 out;
    out = JetAlgebra::axpy(vx.amplitude, acc, out);
    return out;
}

Jet2 vortex_jet(const BesselVortex& vx, double kappa, double s, double y) {
    const double u = s - vx.s0;
    const double v = y - vx.y0;
    const double rho = std::hypot(u, v);
    if (kappa * rho < kCenterSwitch) {
        return vortex_center_jet(vx, kappa, u, v);
    }

    const double R = kappa * rho;
    const BesselJ b = bessel_j(vx.m, R);
    const double dm = static_cast<double>(vx.m);
    // ODE form of the second derivative, fewer cancellation paths than
    // nested recurrences.
    const double jdd = -b.deriv / R + (dm * dm / (R * R) - 1.0) * b.value;

    const double chi = std::atan2(v, u);
    const double c = std::cos(dm * chi + vx.phase);
    const double sn = std::sin(dm * chi + vx.phase);
    const double A = vx.amplitude;

    const double F = A * b.value * c;
    const double F_rho = A * kappa * b.deriv * c;
    const double F_chi = -A * dm * b.value * sn;
    const double F_rr = A * kappa * kappa * jdd * c;
    const double F_rc = -A * kappa * b.deriv * dm * sn;
    const double F_cc = -A * dm * dm * b.value * c;

    const double cx = u / rho;
    const double sx = v / rho;
    const double inv_r = 1.0 / rho;
    const double inv_r2 = inv_r * inv_r;

    Jet2 j;
    j.F = F;
    j.F_s = F_rho * cx - F_chi * sx * inv_r;
    j.F_y = F_rho * sx + F_chi * cx * inv_r;
    j.F_ss = F_rr * cx * cx - 2.0 * F_rc * cx * sx * inv_r + F_cc * sx * sx * inv_r2 +
             F_rho * sx * sx * inv_r + 2.0 * F_chi * sx * cx * inv_r2;
    j.F_yy = F_rr * sx * sx + 2.0 * F_rc * cx * sx * inv_r + F_cc * cx * cx * inv_r2 +
             F_rho * cx * cx * inv_r - 2.0 * F_chi * sx * cx * inv_r2;
    j.F_sy = F_rr * sx * cx + F_rc * (cx * cx - sx * sx) * inv_r - F_cc * sx * cx * inv_r2 -
             F_rho * sx * cx * inv_r + F_chi * (sx * sx - cx * cx) * inv_r2;
    return j;
}

}  // namespace

HorizontalMode::HorizontalMode(double kappa, std::vector<ModePart> parts)
    : kappa_(kappa), parts_(std::move(parts)) {
    if (!(kappa > 0.0)) {
        throw BadParameter("mode kappa must be > 0");
    }
}

double HorizontalMode::total_amplitude() const {
    double total = 0.0;
    for (const auto& part : parts_) {
        std::visit([&total](const auto& p) { total += std::fabs(p.amplitude); }, part);
    }
    return total;
}

HorizontalMode plane_wave(double kappa, double amplitude, double phase, double direction) {
    return HorizontalMode(kappa, {PlaneWave{amplitude, phase, direction}});
}

HorizontalMode bessel_vortex(double kappa, int m, double amplitude, double phase, double s0,
                             double y0) {
    if (m < 0) {
        throw BadParameter("vortex azimuthal order must be >= 0");
    }
    return HorizontalMode(kappa, {BesselVortex{m, amplitude, phase, s0, y0}});
}

HorizontalMode superpose(const std::vector<HorizontalMode>& modes) {
    if (modes.empty()) {
        throw BadParameter("superpose needs at least one mode");
    }
    const double kappa = modes.front().kappa();
    std::vector<ModePart> parts;
    for (const auto& m : modes) {
        if (std::fabs(m.kappa() - kappa) > 1e-12 * std::max(kappa, m.kappa())) {
            throw MixedWavenumbers("superposition mixes kappa " + std::to_string(kappa) +
                                   " with " + std::to_string(m.kappa()));
        }
        parts.insert(parts.end(), m.parts().begin(), m.parts().end());
    }
    return HorizontalMode(kappa, std::move(parts));
}

Jet2 eval_jet(const ModePart& part, double kappa, double s, double y) {
    return std::visit(
        [&](const auto& p) -> Jet2 {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PlaneWave>) {
                return plane_wave_jet(p, kappa, s, y);
            } else {
                return vortex_jet(p, kappa, s, y);
            }
        },
        part);
}

Jet2 eval_jet(const HorizontalMode& mode, double s, double y) {
    Jet2 acc;
    for (const auto& part : mode.parts()) {
        acc = JetAlgebra::axpy(1.0, eval_jet(part, mode.kappa(), s, y), acc);
    }
    return acc;
}

double helmholtz_residual(const HorizontalMode& mode, double s, double y) {
    const Jet2 j = eval_jet(mode, s, y);
    const double kappa2 = mode.kappa() * mode.kappa();
    const double resid = std::fabs(j.F_ss + j.F_yy + kappa2 * j.F);
    const double scale = kappa2 * (std::fabs(j.F) + mode.total_amplitude()) + 1e-300;
    return resid / scale;
}

}  // namespace rossby
