#include "rossby/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "rossby/families.hpp"

namespace rossby {

namespace {

FamilySpec with_value(FamilySpec spec, const std::string& parameter, double v) {
    if (parameter == "k_z") {
        spec.k_z = v;
    } else if (parameter == "K_r") {
        spec.K_r = v;
    } else {
        throw BadParameter("sweep parameter must be \"k_z\" or \"K_r\"");
    }
    return spec;
}

SweepRow probe(const FamilySpec& base, const PhysicalParams& phys,
               const std::string& parameter, double v) {
    SweepRow row;
    row.value = v;
    row.M = std::numeric_limits<double>::quiet_NaN();
    const FamilySpec spec = with_value(base, parameter, v);
    double K = 0.0;
    try {
        K = auxiliary_wavenumber(spec);
    } catch (const ConstraintViolation&) {
        return row;
    }
    row.valid = true;
    const MParts parts = compute_M_parts(spec.family, spec.k_z, K, phys.H);
    row.num = parts.num;
    row.den = parts.den;
    row.resonant = std::fabs(parts.den) < kResonanceTol * (std::fabs(parts.num) + 1.0);
    if (!row.resonant) {
        row.M = parts.num / parts.den;
    }
    return row;
}

}  // namespace

SweepResult sweep_parameter(const FamilySpec& family, const PhysicalParams& phys,
                            const std::string& parameter, double from, double to,
                            int samples) {
    if (family.family == 1) {
        throw BadParameter("family 1 has no resonance constant to sweep");
    }
    if (!(from < to)) {
        throw BadParameter("sweep range is empty");
    }
    if (samples < 2) {
        throw BadParameter("sweep needs at least 2 samples");
    }

    SweepResult result;
    result.parameter = parameter;
    result.rows.reserve(static_cast<std::size_t>(samples));
    const double dv = (to - from) / static_cast<double>(samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double v = (i + 1 == samples) ? to : from + static_cast<double>(i) * dv;
        result.rows.push_back(probe(family, phys, parameter, v));
    }

    auto den_at = [&](double v) { return probe(family, phys, parameter, v).den; };
    for (std::size_t i = 0; i + 1 < result.rows.size(); ++i) {
        const SweepRow& a = result.rows[i];
        const SweepRow& b = result.rows[i + 1];
        if (!a.valid || !b.valid) continue;
        if (a.den == 0.0) {
            result.resonances.push_back(a.value);
            continue;
        }
        if (a.den * b.den < 0.0) {
            double lo = a.value, hi = b.value;
            double flo = a.den;
            for (int it = 0; it < 200 && (hi - lo) > 1e-14 * (1.0 + std::fabs(lo)); ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fmid = den_at(mid);
                if (fmid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((flo < 0.0) == (fmid < 0.0)) {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
            }
            result.resonances.push_back(0.5 * (lo + hi));
        }
    }
    if (!result.rows.empty() && result.rows.back().valid && result.rows.back().den == 0.0) {
        result.resonances.push_back(result.rows.back().value);
    }
    return result;
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
    if (path.empty()) {
        throw IoError("empty sweep output path");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << result.parameter << ",M,denominator,resonant\n";
    char buf[96];
    for (const auto& row : result.rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d\n", row.value, row.M, row.den,
                      row.resonant ? 1 : 0);
        out << buf;
    }
    out.flush();
    if (!out) {
        throw IoError("write failed for '" + path + "'");
    }
}

}  // namespace rossby
