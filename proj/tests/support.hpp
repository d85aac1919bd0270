#pragma once

#include <cmath>
#include <vector>

#include "rossby/families.hpp"
#include "rossby/model.hpp"
#include "rossby/rng.hpp"

// Deterministic random draws of valid, well-conditioned parameter sets.
// Near-resonant M and extreme wavenumbers are redrawn: they are excluded by
// the resonance guard anyway, and the FD oracle needs kappa = O(1).

namespace testsup {

using namespace rossby;

inline PhysicalParams random_phys(SplitMix64& rng) {
    PhysicalParams phys;
    phys.beta = rng.uniform(0.5, 1.5);
    phys.H = rng.uniform(0.8, 2.5);
    const double v = rng.uniform(-0.8, 0.8);
    phys.V = (std::fabs(v) < 0.05) ? 0.0 : v;  // include steady solutions
    return phys;
}

inline FamilySpec random_family_spec(int family, const PhysicalParams& phys,
                                     SplitMix64& rng) {
    FamilySpec s;
    s.family = family;
    if (family == 1) {
        s.n = (phys.H > 2.0 && rng.below(3) == 0) ? 2 : 1;
        s.P = rng.uniform(-2.0, 2.0);
        return s;
    }
    switch (family) {
        case 4:
        case 7:
            s.K_r = rng.uniform(0.6, 1.6);
            s.k_z = s.K_r * rng.uniform(0.15, 0.85);
            break;
        case 5:
        case 8:
            s.k_z = rng.uniform(0.6, 1.6);
            s.K_r = s.k_z * rng.uniform(0.15, 0.85);
            break;
        case 6:
        case 9:
            s.k_z = rng.uniform(0.3, 1.5);
            break;
        default:  // 2, 3
            s.k_z = rng.uniform(0.3, 1.6);
            s.K_r = rng.uniform(0.3, 1.6);
            break;
    }
    return s;
}

// family 1 needs H large enough that kappa = pi n/H stays O(1)
inline PhysicalParams random_phys_for(int family, SplitMix64& rng) {
    PhysicalParams phys = random_phys(rng);
    if (family == 1) {
        phys.H = rng.uniform(2.0, 4.0);
    }
    return phys;
}

inline ValidatedSpec random_validated(int family, SplitMix64& rng) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        const PhysicalParams phys = random_phys_for(family, rng);
        const FamilySpec fs = random_family_spec(family, phys, rng);
        ValidatedSpec v;
        try {
            v = validate(fs, phys);
        } catch (const Error&) {
            continue;
        }
        if (v.has_M) {
            // keep comfortably away from resonances
            const MParts parts = compute_M_parts(fs.family, fs.k_z, v.K, phys.H);
            if (std::fabs(parts.den) < 0.05 * (std::fabs(parts.num) + 1.0)) continue;
            if (std::fabs(v.M) > 25.0) continue;
        }
        // keep the zonal background at a sensible physical magnitude; the
        // FD roundoff floor scales with it
        const double g_mag = std::max(
            {std::fabs(zonal_coefficient(v, 0.0).f), std::fabs(zonal_coefficient(v, 0.5 * phys.H).f),
             std::fabs(zonal_coefficient(v, phys.H).f)});
        if (g_mag > 5.0) continue;
        return v;
    }
    throw BadParameter("random_validated failed to draw a valid spec");
}

// amplitude clear of zero so residual normalizations see the wave
inline double random_amplitude(SplitMix64& rng) {
    const double mag = rng.uniform(0.4, 1.5);
    return rng.below(2) == 0 ? mag : -mag;
}

inline HorizontalMode random_mode_for(const ValidatedSpec& spec, SplitMix64& rng,
                                      bool allow_vortex = true) {
    const double kappa = spec.kappa;
    const int n_parts = 1 + static_cast<int>(rng.below(2));
    std::vector<ModePart> parts;
    for (int i = 0; i < n_parts; ++i) {
        if (allow_vortex && rng.below(3) == 0) {
            parts.push_back(BesselVortex{static_cast<int>(rng.below(4)),
                                         random_amplitude(rng), rng.uniform(0.0, 6.28),
                                         rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        } else {
            parts.push_back(PlaneWave{random_amplitude(rng), rng.uniform(0.0, 6.28),
                                      rng.uniform(0.0, 6.28)});
        }
    }
    return HorizontalMode(kappa, std::move(parts));
}

inline Solution random_solution(int family, SplitMix64& rng, bool allow_vortex = true) {
    const ValidatedSpec spec = random_validated(family, rng);
    return build_solution(spec, random_mode_for(spec, rng, allow_vortex));
}

}  // namespace testsup
