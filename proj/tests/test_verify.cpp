#include <cmath>
#include <numbers>
#include <thread>

#include <doctest.h>

#include "rossby/verify.hpp"
#include "support.hpp"

using namespace rossby;

namespace {

Solution family2_reference() {
    FamilySpec s;
    s.family = 2;
    s.k_z = 1.0;
    s.K_r = 1.0;
    PhysicalParams phys{1.0, 1.0, 0.3};
    const ValidatedSpec v = validate(s, phys);
    return build_solution(v, plane_wave(v.kappa, 1.0, 0.0, 0.0));
}

// magnitude of the BC operator's constituent terms at a point
double bc_term_scale(const Solution& sol, double t, double x, double y, double z) {
    const ValidatedSpec& spec = sol.spec();
    const Jet2 F = eval_jet(sol.mode(), x - spec.phys.V * t, y);
    const VerticalJet f = vertical_profile(spec, z);
    const VerticalJet g = zonal_coefficient(spec, z);
    const double p_x = f.f * F.F_s;
    const double p_y = f.f * F.F_y + g.f;
    const double p_zs = f.df * F.F_s;
    const double p_zy = f.df * F.F_y + g.df;
    return std::fabs(spec.phys.V * p_zs) + std::fabs(p_y * p_zs) + std::fabs(p_x * p_zy) +
           1e-300;
}

}  // namespace

TEST_CASE("analytic residual is zero for pure zonal flow") {
    FamilySpec s;
    s.family = 3;
    s.k_z = 0.9;
    s.K_r = 1.2;
    PhysicalParams phys{1.0, 1.3, 0.5};
    const ValidatedSpec v = validate(s, phys);
    const Solution sol = build_solution(v, HorizontalMode(v.kappa, {}));
    SplitMix64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const double r = pde_residual_analytic(sol, rng.uniform(0, 2), rng.uniform(-3, 3),
                                               rng.uniform(-3, 3), rng.uniform(0, phys.H));
        CHECK(r == 0.0);
    }
}

TEST_CASE("analytic residual, family 1 reference point") {
    PhysicalParams phys{1.0, std::numbers::pi, 0.0};
    FamilySpec s;
    s.family = 1;
    s.n = 1;
    s.P = 1.0;
    const ValidatedSpec v = validate(s, phys);
    const Solution sol = build_solution(v, plane_wave(v.kappa, 1.0, 0.0, 0.0));
    SplitMix64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const double r = pde_residual_analytic(sol, rng.uniform(0, 1), rng.uniform(-6, 6),
                                               rng.uniform(-6, 6), rng.uniform(0, phys.H));
        CHECK(r <= 1e-12);
    }
}

TEST_CASE("analytic residual across all families, random specs and modes") {
    SplitMix64 rng(23);
    for (int family = 1; family <= 9; ++family) {
        for (int k = 0; k < 4; ++k) {
            const Solution sol = testsup::random_solution(family, rng);
            const double H = sol.phys().H;
            const double L = 2.0 * std::numbers::pi / sol.spec().kappa;
            double worst = 0.0;
            for (int i = 0; i < 250; ++i) {
                const double z = (i % 4 == 0) ? 0.0 : (i % 4 == 1 ? H : rng.uniform(0.0, H));
                const double r =
                    pde_residual_analytic(sol, rng.uniform(0.0, 2.0), rng.uniform(-L, L),
                                          rng.uniform(-L, L), z);
                worst = std::max(worst, r);
            }
            CAPTURE(family);
            CHECK(worst <= 1e-10);
        }
    }
}

TEST_CASE("finite-difference residual on an exact solution, interior points") {
    const Solution sol = family2_reference();
    SplitMix64 rng(24);
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double z = rng.uniform(0.1, 0.9);
        const double r = pde_residual_fd(sol, rng.uniform(0.0, 2.0), rng.uniform(-6.0, 6.0),
                                         rng.uniform(-6.0, 6.0), z, 1e-3);
        worst = std::max(worst, r);
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("finite-difference residual flags a corrupted field") {
    // an exact solution plus a spurious (eps/2) z^2 y term: the vertical
    // second derivative gains eps*y, which the FD operator must see
    const Solution sol = family2_reference();
    const double eps = 1e-2;
    ScalarField corrupted = [&](double t, double x, double y, double z) {
        return eval(sol, t, x, y, z).p + 0.5 * eps * z * z * y;
    };
    // a point with healthy F_s so the defect enters the Jacobian
    const double r = pde_residual_fd(corrupted, 1.0, 1.0, 0.0, 1.3, 0.4, 0.5, 1e-3);
    CHECK(r > 1e-3);
}

TEST_CASE("two-route agreement between analytic and FD residuals") {
    // on exact solutions both routes stay within the FD tolerance of each
    // other; the corrupted-field tests cover the firing side
    SplitMix64 rng(25);
    for (int family = 1; family <= 9; ++family) {
        const Solution sol = testsup::random_solution(family, rng, /*allow_vortex=*/false);
        SamplingPlan plan;
        plan.n_points = 120;
        plan.seed = 40 + static_cast<std::uint64_t>(family);
        const VerificationReport rep = verify_solution(sol, plan);
        const double ra = rep.check("pde_analytic").max;
        const double rf = rep.check("pde_fd").max;
        CAPTURE(family);
        CHECK(std::fabs(rf - ra) <= 1e-5);
    }
}

TEST_CASE("boundary-condition residual vanishes at bottom and lid") {
    SplitMix64 rng(26);
    for (int family = 1; family <= 9; ++family) {
        for (int k = 0; k < 3; ++k) {
            const Solution sol = testsup::random_solution(family, rng);
            const double H = sol.phys().H;
            for (int i = 0; i < 40; ++i) {
                const double t = rng.uniform(0.0, 3.0);
                const double x = rng.uniform(-5.0, 5.0);
                const double y = rng.uniform(-5.0, 5.0);
                CAPTURE(family);
                CHECK(bc_residual(sol, t, x, y, 0.0) <= 1e-12);
                CHECK(bc_residual(sol, t, x, y, H) <= 1e-12);
            }
        }
    }
}

TEST_CASE("interior boundary operator matches the families closed forms") {
    SplitMix64 rng(27);
    for (int family = 1; family <= 9; ++family) {
        for (int k = 0; k < 2; ++k) {
            const Solution sol = testsup::random_solution(family, rng);
            const double H = sol.phys().H;
            for (int i = 0; i < 100; ++i) {
                const double t = rng.uniform(0.0, 3.0);
                const double x = rng.uniform(-5.0, 5.0);
                const double y = rng.uniform(-5.0, 5.0);
                const double z = rng.uniform(0.0, H);
                CAPTURE(family);
                CHECK(bc_match_residual(sol, t, x, y, z) <= 1e-9);
            }
        }
    }
}

TEST_CASE("drift-frame and lab-frame BC assemblies agree") {
    SplitMix64 rng(28);
    for (int family = 1; family <= 9; ++family) {
        const Solution sol = testsup::random_solution(family, rng);
        const double H = sol.phys().H;
        for (int i = 0; i < 30; ++i) {
            const double t = rng.uniform(0.0, 3.0);
            const double x = rng.uniform(-4.0, 4.0);
            const double y = rng.uniform(-4.0, 4.0);
            const double z = rng.uniform(0.0, H);
            const double lab = bc_operator_lab(sol, t, x, y, z);
            const double drift = bc_operator_drift(sol, t, x, y, z);
            const double scale = bc_term_scale(sol, t, x, y, z);
            CHECK(std::fabs(lab - drift) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("negative control: 1% perturbation of M breaks the lid condition") {
    SplitMix64 rng(29);
    for (int family = 2; family <= 9; ++family) {
        ValidatedSpec spec = testsup::random_validated(family, rng);
        spec.M *= 1.01;
        const Solution bad = build_solution(spec, plane_wave(spec.kappa, 1.0, 0.0, 0.0));
        SamplingPlan plan;
        plan.n_points = 200;
        plan.seed = 5;
        const VerificationReport rep = verify_solution(bad, plan);
        CAPTURE(family);
        CHECK(!rep.pass);
        CHECK(!rep.check("bc_lid").pass);
    }
}

TEST_CASE("negative control: 1% violation of the K^2 relation breaks the PDE") {
    SplitMix64 rng(30);
    for (int family : {2, 3, 4, 5, 7, 8}) {
        ValidatedSpec spec = testsup::random_validated(family, rng);
        spec.K *= std::sqrt(1.01);
        const Solution bad = build_solution(spec, plane_wave(spec.kappa, 1.0, 0.0, 0.0));
        SamplingPlan plan;
        plan.n_points = 200;
        plan.seed = 6;
        const VerificationReport rep = verify_solution(bad, plan);
        CAPTURE(family);
        CHECK(!rep.pass);
        CHECK(!rep.check("pde_analytic").pass);
    }
}

TEST_CASE("verify_solution passes a default family-1 run") {
    PhysicalParams phys{1.0, std::numbers::pi, 0.2};
    FamilySpec s;
    s.family = 1;
    s.n = 1;
    s.P = 0.7;
    const ValidatedSpec v = validate(s, phys);
    const Solution sol = build_solution(v, plane_wave(v.kappa, 1.0, 0.3, 0.6));
    SamplingPlan plan;
    plan.n_points = 400;
    const VerificationReport rep = verify_solution(sol, plan);
    CHECK(rep.pass);
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("verify_solution rejects a bad plan") {
    const Solution sol = family2_reference();
    SamplingPlan plan;
    plan.n_points = 0;
    CHECK_THROWS_AS(verify_solution(sol, plan), BadParameter);
    plan.n_points = 10;
    plan.fd_step = 0.5;
    CHECK_THROWS_AS(verify_solution(sol, plan), BadParameter);
}

TEST_CASE("verify_solution is deterministic given the seed") {
    const Solution sol = family2_reference();
    SamplingPlan plan;
    plan.n_points = 150;
    plan.seed = 77;
    const VerificationReport a = verify_solution(sol, plan);
    const VerificationReport b = verify_solution(sol, plan);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].max == b.checks[i].max);
        CHECK(a.checks[i].mean == b.checks[i].mean);
        CHECK(a.checks[i].count == b.checks[i].count);
    }
}

TEST_CASE("family 5 stress: K near zero but above the resonance guard") {
    FamilySpec s;
    s.family = 5;
    s.k_z = 1.0;
    s.K_r = 0.98;  // K ~ 0.2
    PhysicalParams phys{1.0, 1.0, 0.25};
    const ValidatedSpec v = validate(s, phys);
    CHECK(v.K < 0.25);
    const Solution sol = build_solution(v, plane_wave(v.kappa, 1.0, 0.1, 0.4));
    SamplingPlan plan;
    plan.n_points = 300;
    const VerificationReport rep = verify_solution(sol, plan);
    CHECK(rep.pass);
}

TEST_CASE("verify_solution handles the zero mode and near-zero drift") {
    FamilySpec s;
    s.family = 3;
    s.k_z = 0.9;
    s.K_r = 1.1;
    PhysicalParams phys{1.0, 1.3, 1e-9};  // t range would be ~1e10 uncapped
    const ValidatedSpec v = validate(s, phys);
    const Solution sol = build_solution(v, HorizontalMode(v.kappa, {}));
    SamplingPlan plan;
    plan.n_points = 60;
    const VerificationReport rep = verify_solution(sol, plan);
    CHECK(rep.pass);
    CHECK(rep.check("pde_analytic").max == 0.0);
    CHECK(rep.check("pde_fd").max == 0.0);
}

TEST_CASE("verification is stable under concurrent evaluation") {
    // evaluation is pure; identical inputs from many threads must agree
    const Solution sol = family2_reference();
    SamplingPlan plan;
    plan.n_points = 80;
    plan.seed = 303;
    const VerificationReport serial = verify_solution(sol, plan);

    std::vector<VerificationReport> reports(4);
    std::vector<std::thread> threads;
    threads.reserve(reports.size());
    for (auto& rep : reports) {
        threads.emplace_back([&sol, &plan, &rep] { rep = verify_solution(sol, plan); });
    }
    for (auto& th : threads) th.join();
    for (const auto& rep : reports) {
        REQUIRE(rep.checks.size() == serial.checks.size());
        for (std::size_t i = 0; i < rep.checks.size(); ++i) {
            CHECK(rep.checks[i].max == serial.checks[i].max);
            CHECK(rep.checks[i].mean == serial.checks[i].mean);
        }
    }
}

TEST_CASE("vortex solutions verify including center probes") {
    FamilySpec s;
    s.family = 7;
    s.k_z = 0.5;
    s.K_r = 1.2;
    PhysicalParams phys{1.0, 1.4, 0.35};
    const ValidatedSpec v = validate(s, phys);
    const Solution sol = build_solution(v, bessel_vortex(v.kappa, 1, 1.0, 0.2, 0.3, -0.4));
    SamplingPlan plan;
    plan.n_points = 200;
    const VerificationReport rep = verify_solution(sol, plan);
    CHECK(rep.pass);
}
