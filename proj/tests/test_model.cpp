#include <cmath>
#include <numbers>

#include <doctest.h>

#include "rossby/families.hpp"
#include "rossby/model.hpp"
#include "rossby/rng.hpp"

using namespace rossby;

namespace {

FamilySpec spec2(int family, double k_z, double K_r) {
    FamilySpec s;
    s.family = family;
    s.k_z = k_z;
    s.K_r = K_r;
    return s;
}

}  // namespace

TEST_CASE("family 1 basic validation") {
    FamilySpec s;
    s.family = 1;
    s.n = 1;
    s.P = 0.0;
    PhysicalParams phys{1.0, std::numbers::pi, 0.0};
    const ValidatedSpec v = validate(s, phys);
    CHECK(v.kappa == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(!v.has_K);
    CHECK(!v.has_M);
}

TEST_CASE("family 4 rejects k_z >= K_r") {
    PhysicalParams phys;
    CHECK_THROWS_AS(validate(spec2(4, 2.0, 1.0), phys), ConstraintViolation);
    CHECK_THROWS_AS(validate(spec2(4, 1.0, 1.0), phys), ConstraintViolation);
    CHECK_NOTHROW(validate(spec2(4, 0.5, 1.0), phys));
}

TEST_CASE("family 5 and 8 require k_z > K_r") {
    PhysicalParams phys;
    CHECK_THROWS_AS(validate(spec2(5, 0.5, 1.0), phys), ConstraintViolation);
    CHECK_THROWS_AS(validate(spec2(8, 0.5, 1.0), phys), ConstraintViolation);
    CHECK_NOTHROW(validate(spec2(5, 1.5, 1.0), phys));
    CHECK_NOTHROW(validate(spec2(8, 1.5, 1.0), phys));
}

TEST_CASE("family 3 derived constants against the high-precision route") {
    PhysicalParams phys{1.0, 1.0, 0.0};
    const ValidatedSpec v = validate(spec2(3, 1.0, 1.0), phys);
    CHECK(v.K == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    // independent long double evaluation of the family-3 formula
    const long double kz = 1.0L, H = 1.0L;
    const long double K = sqrtl(2.0L);
    const long double num = kz * sinl(kz * H);
    const long double den = kz * sinl(kz * H) * cosl(K * H) - K * cosl(kz * H) * sinl(K * H);
    const double m_ref = static_cast<double>(num / den);
    CHECK(v.M == doctest::Approx(m_ref).epsilon(1e-14));
    CHECK(v.has_M);
}

TEST_CASE("horizontal wavenumber per family") {
    PhysicalParams phys;
    FamilySpec f1;
    f1.family = 1;
    f1.n = 2;
    phys.H = 2.0;
    CHECK(horizontal_wavenumber(f1, phys) == doctest::Approx(std::numbers::pi));

    CHECK(horizontal_wavenumber(spec2(7, 0.2, 0.5), phys) == doctest::Approx(0.5));

    FamilySpec f6;
    f6.family = 6;
    f6.k_z = 1.3;
    CHECK(horizontal_wavenumber(f6, phys) == doctest::Approx(1.3));
}

TEST_CASE("K relations hold to machine precision for random valid specs") {
    PhysicalParams phys{0.7, 1.3, 0.2};
    SplitMix64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(0.1, 2.0);
        const double b = rng.uniform(0.1, 2.0);
        const int pick = static_cast<int>(rng.below(6));
        const int family = (pick < 2) ? pick + 2 : (pick < 4 ? (pick == 2 ? 4 : 7) : (pick == 4 ? 5 : 8));
        FamilySpec s;
        s.family = family;
        if (family == 4 || family == 7) {
            s.k_z = std::min(a, b) * 0.9;
            s.K_r = std::max(a, b) + 0.05;
        } else if (family == 5 || family == 8) {
            s.k_z = std::max(a, b) + 0.05;
            s.K_r = std::min(a, b) * 0.9;
        } else {
            s.k_z = a;
            s.K_r = b;
        }
        ValidatedSpec v;
        try {
            v = validate(s, phys);
        } catch (const ResonantDepth&) {
            continue;  // unlucky draw near a resonance
        }
        const double K2 = v.K * v.K;
        const double k2 = s.k_z * s.k_z;
        const double r2 = s.K_r * s.K_r;
        const double scale = K2 + k2 + r2;
        if (family == 2 || family == 3) {
            CHECK(std::fabs(K2 - k2 - r2) <= 1e-15 * scale);
        } else if (family == 4 || family == 7) {
            CHECK(std::fabs(K2 + k2 - r2) <= 1e-15 * scale);
        } else {
            CHECK(std::fabs(K2 - k2 + r2) <= 1e-15 * scale);
        }
        CHECK(v.K > 0.0);
    }
}

TEST_CASE("validate is idempotent on derived constants") {
    PhysicalParams phys{1.1, 0.9, -0.4};
    const ValidatedSpec v1 = validate(spec2(2, 0.8, 1.2), phys);
    const ValidatedSpec v2 = validate(v1.base, v1.phys);
    CHECK(v1.K == v2.K);
    CHECK(v1.kappa == v2.kappa);
    CHECK(v1.M == v2.M);
}

TEST_CASE("parameter rejection paths") {
    PhysicalParams phys;
    FamilySpec f1;
    f1.family = 1;

    SUBCASE("H <= 0") {
        phys.H = 0.0;
        CHECK_THROWS_AS(validate(f1, phys), BadParameter);
        phys.H = -1.0;
        CHECK_THROWS_AS(validate(f1, phys), BadParameter);
    }
    SUBCASE("n < 1") {
        f1.n = 0;
        CHECK_THROWS_AS(validate(f1, phys), BadParameter);
    }
    SUBCASE("family id range") {
        f1.family = 0;
        CHECK_THROWS_AS(validate(f1, phys), BadParameter);
        f1.family = 10;
        CHECK_THROWS_AS(validate(f1, phys), BadParameter);
    }
    SUBCASE("K_r = 0 where a horizontal wavenumber is required") {
        CHECK_THROWS_AS(validate(spec2(2, 1.0, 0.0), phys), BadParameter);
        CHECK_THROWS_AS(validate(spec2(8, 1.0, 0.0), phys), BadParameter);
    }
    SUBCASE("k_z = 0 in families 6 and 9") {
        FamilySpec f6;
        f6.family = 6;
        f6.k_z = 0.0;
        CHECK_THROWS_AS(validate(f6, phys), BadParameter);
        f6.family = 9;
        CHECK_THROWS_AS(validate(f6, phys), BadParameter);
    }
    SUBCASE("hyperbolic overflow guard") {
        FamilySpec f9;
        f9.family = 9;
        f9.k_z = 400.0;
        CHECK_THROWS_AS(validate(f9, phys), BadParameter);
    }
    SUBCASE("non-finite parameters") {
        phys.beta = std::nan("");
        CHECK_THROWS_AS(validate(f1, phys), BadParameter);
    }
    SUBCASE("V = 0 and any real P are fine") {
        phys.V = 0.0;
        f1.P = -17.25;
        CHECK_NOTHROW(validate(f1, phys));
    }
}

TEST_CASE("near-resonant depth is rejected, family 6 small k_z") {
    // den = sinh(k_z H) - cosh(k_z H) k_z H -> -(k_z H)^3/3 as k_z -> 0
    PhysicalParams phys{1.0, 1.0, 0.1};
    FamilySpec f6;
    f6.family = 6;
    f6.k_z = 1e-4;
    CHECK_THROWS_AS(validate(f6, phys), ResonantDepth);
}
