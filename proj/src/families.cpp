#include "rossby/families.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace rossby {

namespace {

void check_z(const ValidatedSpec& spec, double z) {
    if (!(z >= 0.0 && z <= spec.phys.H)) {
        throw DomainError("z = " + std::to_string(z) + " outside [0, " +
                          std::to_string(spec.phys.H) + "]");
    }
}

double drift_coordinate(const ValidatedSpec& spec, double t, double x) {
    return x - spec.phys.V * t;
}

}  // namespace

MParts compute_M_parts(int family, double k_z, double K, double H) {
    const double kzH = k_z * H;
    const double KH = K * H;
    MParts p;
    switch (family) {
        case 2:
            p.num = k_z * std::cos(kzH) * std::cos(KH) - k_z * std::cos(kzH) +
                    K * std::sin(kzH) * std::sin(KH);
            p.den = K * std::sin(kzH) * std::cos(KH) - k_z * std::cos(kzH) * std::sin(KH);
            break;
        case 3:
            p.num = k_z * std::sin(kzH);
            p.den = k_z * std::sin(kzH) * std::cos(KH) - K * std::cos(kzH) * std::sin(KH);
            break;
        case 4:
            p.num = std::cosh(kzH) * k_z * std::cos(KH) - std::cosh(kzH) * k_z +
                    std::sinh(kzH) * K * std::sin(KH);
            p.den = -std::cosh(kzH) * k_z * std::sin(KH) + K * std::sinh(kzH) * std::cos(KH);
            break;
        case 5:
            p.num = -std::cosh(kzH) * k_z * std::cosh(KH) + std::cosh(kzH) * k_z +
                    std::sinh(kzH) * K * std::sinh(KH);
            p.den = -std::cosh(kzH) * k_z * std::sinh(KH) + K * std::sinh(kzH) * std::cosh(KH);
            break;
        case 6:
            p.num = 2.0 * std::sinh(kzH) - std::cosh(kzH) * kzH;
            p.den = std::sinh(kzH) - std::cosh(kzH) * kzH;
            break;
        case 7:
            p.num = std::sinh(kzH) * k_z;
            p.den = std::sinh(kzH) * k_z * std::cos(KH) + K * std::cosh(kzH) * std::sin(KH);
            break;
        case 8:
            p.num = std::sinh(kzH) * k_z;
            p.den = -std::sinh(kzH) * k_z * std::cosh(KH) + K * std::cosh(kzH) * std::sinh(KH);
            break;
        case 9:
            // M = 1 - 2 cosh(k_z H) / (sinh(k_z H) H k_z), as num/den
            p.num = std::sinh(kzH) * kzH - 2.0 * std::cosh(kzH);
            p.den = std::sinh(kzH) * kzH;
            break;
        default:
            throw BadParameter("family " + std::to_string(family) +
                               " has no resonance constant M");
    }
    return p;
}

double compute_M(const FamilySpec& spec, const PhysicalParams& phys) {
    const ValidatedSpec v = validate(spec, phys);
    if (!v.has_M) {
        throw BadParameter("family 1 has no resonance constant M");
    }
    return v.M;
}

VerticalJet vertical_profile(const ValidatedSpec& spec, double z) {
    check_z(spec, z);
    const double k = spec.base.k_z;
    VerticalJet j;
    switch (spec.base.family) {
        case 1:
            j = {1.0, 0.0, 0.0};
            break;
        case 2:
            j = {std::sin(k * z), k * std::cos(k * z), -(k * k) * std::sin(k * z)};
            break;
        case 3:
            j = {std::cos(k * z), -k * std::sin(k * z), -(k * k) * std::cos(k * z)};
            break;
        case 4:
        case 5:
        case 6:
            j = {std::sinh(k * z), k * std::cosh(k * z), (k * k) * std::sinh(k * z)};
            break;
        default:  // 7, 8, 9
            j = {std::cosh(k * z), k * std::sinh(k * z), (k * k) * std::cosh(k * z)};
            break;
    }
    return j;
}

VerticalJet zonal_coefficient(const ValidatedSpec& spec, double z) {
    check_z(spec, z);
    const double beta = spec.phys.beta;
    const double H = spec.phys.H;
    const double V = spec.phys.V;
    const double K = spec.K;
    const double M = spec.M;
    VerticalJet j;
    switch (spec.base.family) {
        case 1: {
            const double kap = spec.kappa;  // pi n / H
            const double P = spec.base.P;
            j.f = P * std::cos(kap * z) - beta / (kap * kap) - V;
            j.df = -P * kap * std::sin(kap * z);
            j.ddf = -P * kap * kap * std::cos(kap * z);
            break;
        }
        case 2:
        case 4: {
            const double s = std::sin(K * z);
            const double c = std::cos(K * z);
            j.f = beta * (M * s + c - 1.0) / (K * K) - V;
            j.df = beta * (M * c - s) / K;
            j.ddf = -beta * (M * s + c);
            break;
        }
        case 3:
        case 7: {
            const double s = std::sin(K * z);
            const double c = std::cos(K * z);
            j.f = beta * (M * c - 1.0) / (K * K) - V;
            j.df = -beta * M * s / K;
            j.ddf = -beta * M * c;
            break;
        }
        case 5: {
            const double sh = std::sinh(K * z);
            const double ch = std::cosh(K * z);
            j.f = beta * (M * sh - ch + 1.0) / (K * K) - V;
            j.df = beta * (M * ch - sh) / K;
            j.ddf = beta * (M * sh - ch);
            break;
        }
        case 6:
            j.f = -0.5 * beta * z * z + 0.5 * beta * H * M * z - V;
            j.df = -beta * z + 0.5 * beta * H * M;
            j.ddf = -beta;
            break;
        case 8: {
            const double sh = std::sinh(K * z);
            const double ch = std::cosh(K * z);
            j.f = beta * (M * ch + 1.0) / (K * K) - V;
            j.df = beta * M * sh / K;
            j.ddf = beta * M * ch;
            break;
        }
        default:  // 9
            j.f = -0.5 * beta * z * z + 0.5 * beta * H * H * M - V;
            j.df = -beta * z;
            j.ddf = -beta;
            break;
    }
    return j;
}

StableZonal zonal_stable(const ValidatedSpec& spec, double z) {
    check_z(spec, z);
    const double beta = spec.phys.beta;
    const double K = spec.K;
    const double M = spec.M;
    StableZonal out;
    switch (spec.base.family) {
        case 1: {
            const double kap = spec.kappa;
            const double q = spec.base.P * std::cos(kap * z) - beta / (kap * kap);
            out.g_plus_V = q;
            out.gamma = -(kap * kap) * q;
            break;
        }
        case 2:
        case 4: {
            // cos(Kz) - 1 = -2 sin^2(Kz/2), exact relative accuracy
            const double half = std::sin(0.5 * K * z);
            const double q = M * std::sin(K * z) - 2.0 * half * half;
            out.g_plus_V = beta * q / (K * K);
            out.gamma = -beta * q;
            break;
        }
        case 3:
        case 7: {
            const double q = M * std::cos(K * z) - 1.0;
            out.g_plus_V = beta * q / (K * K);
            out.gamma = -beta * q;
            break;
        }
        case 5: {
            // cosh(Kz) - 1 = 2 sinh^2(Kz/2)
            const double half = std::sinh(0.5 * K * z);
            const double q = M * std::sinh(K * z) - 2.0 * half * half;
            out.g_plus_V = beta * q / (K * K);
            out.gamma = beta * q;
            break;
        }
        case 8: {
            const double q = M * std::cosh(K * z) + 1.0;
            out.g_plus_V = beta * q / (K * K);
            out.gamma = beta * q;
            break;
        }
        case 6:
            out.g_plus_V = -0.5 * beta * z * z + 0.5 * beta * spec.phys.H * M * z;
            out.gamma = 0.0;
            break;
        default:  // 9
            out.g_plus_V = -0.5 * beta * z * z + 0.5 * beta * spec.phys.H * spec.phys.H * M;
            out.gamma = 0.0;
            break;
    }
    return out;
}

double laplacian_coefficient(const ValidatedSpec& spec, double f_value) {
    const double K2 = spec.K * spec.K;
    switch (spec.base.family) {
        case 1:
            return -(spec.kappa * spec.kappa);
        case 2:
        case 3:
        case 4:
        case 7:
            return -K2 * f_value;
        case 5:
        case 8:
            return K2 * f_value;
        default:  // 6, 9
            return 0.0;
    }
}

Solution::Solution(ValidatedSpec spec, HorizontalMode mode)
    : spec_(std::move(spec)), mode_(std::move(mode)) {
    const double want = spec_.kappa;
    const double got = mode_.kappa();
    if (std::fabs(got - want) > 1e-12 * std::max(std::fabs(want), std::fabs(got))) {
        throw WavenumberMismatch("mode kappa " + std::to_string(got) +
                                 " does not match family kappa " + std::to_string(want));
    }
}

Solution build_solution(const ValidatedSpec& spec, HorizontalMode mode) {
    return Solution(spec, std::move(mode));
}

StreamSample eval(const Solution& sol, double t, double x, double y, double z) {
    const ValidatedSpec& spec = sol.spec();
    check_z(spec, z);
    const double s = drift_coordinate(spec, t, x);
    const Jet2 F = eval_jet(sol.mode(), s, y);
    const VerticalJet f = vertical_profile(spec, z);
    const VerticalJet g = zonal_coefficient(spec, z);
    StreamSample out;
    out.p = f.f * F.F + g.f * y;
    out.u = -(f.f * F.F_y + g.f);
    out.v = f.f * F.F_s;
    out.p_z = f.df * F.F + g.df * y;
    return out;
}

double bc_closed_form(const Solution& sol, double t, double x, double y, double z) {
    const ValidatedSpec& spec = sol.spec();
    check_z(spec, z);
    const double s = drift_coordinate(spec, t, x);
    const Jet2 F = eval_jet(sol.mode(), s, y);
    const double Fx = F.F_s;  // d/dx of F(x - V t, y)
    const double beta = spec.phys.beta;
    const double H = spec.phys.H;
    const double k = spec.base.k_z;
    const double K = spec.K;
    const double M = spec.M;

    switch (spec.base.family) {
        case 1: {
            const double kap = spec.kappa;
            return -Fx * std::sin(kap * z) * kap * spec.base.P;
        }
        case 2:
            return Fx * beta / (K * K) *
                   (M * (K * std::sin(k * z) * std::cos(K * z) -
                         k * std::cos(k * z) * std::sin(K * z)) -
                    k * std::cos(k * z) * std::cos(K * z) + k * std::cos(k * z) -
                    K * std::sin(k * z) * std::sin(K * z));
        case 3:
            return Fx * beta / (K * K) *
                   (M * (k * std::sin(k * z) * std::cos(K * z) -
                         K * std::cos(k * z) * std::sin(K * z)) -
                    k * std::sin(k * z));
        case 4:
            return Fx * beta / (K * K) *
                   (-std::cosh(k * z) * k * std::sin(K * z) * M + std::cosh(k * z) * k -
                    std::cosh(k * z) * k * std::cos(K * z) +
                    std::sinh(k * z) * K * std::cos(K * z) * M -
                    std::sinh(k * z) * K * std::sin(K * z));
        case 5:
            return Fx * beta / (K * K) *
                   (-std::cosh(k * z) * k * std::sinh(K * z) * M - std::cosh(k * z) * k +
                    std::cosh(k * z) * k * std::cosh(K * z) +
                    std::sinh(k * z) * K * std::cosh(K * z) * M -
                    std::sinh(k * z) * K * std::sinh(K * z));
        case 6:
            return -0.5 * Fx * beta *
                   (-std::cosh(k * z) * k * z * z + std::cosh(k * z) * k * H * M * z +
                    2.0 * std::sinh(k * z) * z - std::sinh(k * z) * H * M);
        case 7:
            return -Fx * beta / (K * K) *
                   (std::sinh(k * z) * k * std::cos(K * z) * M - std::sinh(k * z) * k +
                    std::cosh(k * z) * K * std::sin(K * z) * M);
        case 8:
            return Fx * beta / (K * K) *
                   (-std::sinh(k * z) * k * std::cosh(K * z) * M - std::sinh(k * z) * k +
                    std::cosh(k * z) * K * std::sinh(K * z) * M);
        default:  // 9
            return -0.5 * Fx * beta *
                   (-std::sinh(k * z) * k * z * z + std::sinh(k * z) * k * H * H * M +
                    2.0 * std::cosh(k * z) * z);
    }
}

}  // namespace rossby
