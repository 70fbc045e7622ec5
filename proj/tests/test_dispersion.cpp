#include <doctest.h>

#include <cmath>
#include <random>

#include "coophunt/dispersion.hpp"

using namespace coophunt;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace

TEST_CASE("sinc series branch is accurate and continuous") {
    for (const double x : {1e-12, 1e-8, 1e-6, 5e-5, 9.9e-5}) {
        // Compare against the Taylor series with the next term as the bound.
        const double ref = 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
        CHECK(std::fabs(sinc(x) - ref) < 1e-12);
    }
    // Continuity across the branch switch.
    CHECK(std::fabs(sinc(1.0000001e-4) - sinc(0.9999999e-4)) < 1e-12);
    CHECK(sinc(0.0) == 1.0);
    // Complex version reduces to sinh(x)/x on the imaginary axis.
    const Complex z(0.0, 0.7);
    CHECK(sinc(z).real() == doctest::Approx(std::sinh(0.7) / 0.7).epsilon(1e-12));
    CHECK(sinc(z).imag() == doctest::Approx(0.0));
}

TEST_CASE("dispersion at k = 0 reduces to the temporal eigenvalues") {
    const ModelParams p = baseline_params(0.04);
    const SpatialParams sp{0.01, 10.0, 0.0};
    const auto curve = local_dispersion(p, sp, linspace(0.0, 1.0, 11));
    const auto eq = unique_interior_equilibrium(p);
    CHECK(std::abs(curve.lambda_plus[0] - eq.eigenvalues.first) < 1e-10);
    CHECK(std::abs(curve.lambda_minus[0] - eq.eigenvalues.second) < 1e-10);
}

TEST_CASE("unstable band exists at d1 = 0.01 and none at d1 = 1") {
    const ModelParams p = baseline_params(0.04);
    const auto grid = linspace(0.0, 3.0, 600);

    const auto turing = local_dispersion(p, {0.01, 10.0, 0.0}, grid);
    CHECK(turing.has_unstable);

    const auto stable = local_dispersion(p, {1.0, 10.0, 0.0}, grid);
    CHECK_FALSE(stable.has_unstable);
}

TEST_CASE("local Turing threshold values") {
    const auto r04 = turing_threshold_local(baseline_params(0.04), 10.0);
    CHECK(std::fabs(r04.d1_critical - 0.1695) < 1e-3);
    CHECK(r04.tangency_residual < 1e-9);

    const auto r40 = turing_threshold_local(baseline_params(0.4), 10.0);
    CHECK(std::fabs(r40.d1_critical - 2.59) < 0.02);
}

TEST_CASE("C(k^2) at the local threshold is tangent from above") {
    const ModelParams p = baseline_params(0.04);
    const auto th = turing_threshold_local(p, 10.0);
    const SpatialParams sp{th.d1_critical, 10.0, 0.0};
    const auto curve = local_dispersion(p, sp, linspace(1e-3, 4.0 * th.k_critical, 2000));
    double cmin = 1e300;
    double k_at = 0.0;
    for (std::size_t i = 0; i < curve.k.size(); ++i) {
        if (curve.det_term[i] < cmin) {
            cmin = curve.det_term[i];
            k_at = curve.k[i];
        }
        CHECK(curve.det_term[i] > -1e-6);
    }
    CHECK(std::fabs(cmin) < 1e-6);
    CHECK(k_at == doctest::Approx(th.k_critical).epsilon(1e-2));
}

TEST_CASE("unstable band brackets the most unstable mode; collapses at threshold") {
    const ModelParams p = baseline_params(0.04);

    const auto band = unstable_band(p, {0.01, 10.0, 0.0});
    REQUIRE(band.has_value());
    const auto curve = local_dispersion(p, {0.01, 10.0, 0.0}, linspace(1e-3, 3.0, 3000));
    const double k2_best = curve.k_at_max * curve.k_at_max;
    CHECK(band->first < k2_best);
    CHECK(k2_best < band->second);

    const auto th = turing_threshold_local(p, 10.0);
    const auto collapsed = unstable_band(p, {th.d1_critical, 10.0, 0.0});
    REQUIRE(collapsed.has_value());
    const double k2min = th.k_critical * th.k_critical;
    CHECK(std::fabs(collapsed->first - k2min) / k2min < 1e-4);
    CHECK(std::fabs(collapsed->second - k2min) / k2min < 1e-4);

    CHECK_FALSE(unstable_band(p, {th.d1_critical * 1.01, 10.0, 0.0}).has_value());
}

TEST_CASE("band is nonempty exactly when d1 is below the critical value") {
    const ModelParams p = baseline_params(0.04);
    const auto th = turing_threshold_local(p, 10.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> factor(0.2, 1.8);
    for (int i = 0; i < 20; ++i) {
        const double d1 = th.d1_critical * factor(rng);
        const auto band = unstable_band(p, {d1, 10.0, 0.0});
        CHECK(band.has_value() == (d1 < th.d1_critical));
    }
}

TEST_CASE("nonlocal dispersion reduces to local as delta -> 0") {
    const ModelParams p = baseline_params(0.04);
    const auto grid = linspace(0.0, 2.0, 400);
    const auto loc = local_dispersion(p, {0.01, 10.0, 0.0}, grid);
    const auto nl = nonlocal_dispersion(p, {0.01, 10.0, 1e-8}, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(nl.lambda_plus[i] - loc.lambda_plus[i]) < 1e-6);
        CHECK(std::fabs(nl.det_term[i] - loc.det_term[i]) < 1e-6);
    }
}

TEST_CASE("nonlocal model has an unstable band in the Fig-6b regime") {
    const auto curve = nonlocal_dispersion(baseline_params(0.04), {0.01, 10.0, 50.0},
                                           linspace(0.0, 3.0, 1200));
    CHECK(curve.has_unstable);
}

TEST_CASE("nonlocal Turing thresholds match the published values") {
    const auto a = turing_threshold_nonlocal(baseline_params(0.04), 10.0, 10.0);
    CHECK(std::fabs(a.d1_critical - 0.1741) < 1e-3);
    CHECK(a.tangency_residual < 1e-8);

    const auto b = turing_threshold_nonlocal(baseline_params(0.04), 10.0, 50.0);
    CHECK(std::fabs(b.d1_critical - 0.17397) < 1e-3);

    const auto c = turing_threshold_nonlocal(baseline_params(0.4), 10.0, 10.0);
    CHECK(std::fabs(c.d1_critical - 2.64) < 0.02);

    const auto d = turing_threshold_nonlocal(baseline_params(0.4), 10.0, 50.0);
    CHECK(std::fabs(d.d1_critical - 2.70) < 0.02);
}

TEST_CASE("eigenvalue branches vary continuously along k") {
    const auto curve = nonlocal_dispersion(baseline_params(0.04), {0.05, 10.0, 50.0},
                                           linspace(1e-3, 2.0, 4000));
    for (std::size_t i = 1; i < curve.k.size(); ++i) {
        const double dk = curve.k[i] - curve.k[i - 1];
        const double jump =
            std::fabs(std::max(curve.lambda_plus[i].real(), curve.lambda_minus[i].real()) -
                      std::max(curve.lambda_plus[i - 1].real(),
                               curve.lambda_minus[i - 1].real()));
        // Derivative estimate from the neighboring segment.
        if (i >= 2) {
            const double prev_jump = std::fabs(
                std::max(curve.lambda_plus[i - 1].real(), curve.lambda_minus[i - 1].real()) -
                std::max(curve.lambda_plus[i - 2].real(), curve.lambda_minus[i - 2].real()));
            CHECK(jump < 10.0 * (prev_jump + dk));
        }
    }
}

TEST_CASE("turing curve orderings flip across the Hopf line") {
    const ModelParams p = baseline_params();
    const std::vector<double> alphas{0.02, 0.04, 0.2, 0.4};
    const auto local = turing_curve(p, 10.0, 0.0, {0.02, 0.4}, 4, 2);
    const auto nl10 = turing_curve(p, 10.0, 10.0, {0.02, 0.4}, 4, 2);
    const auto nl50 = turing_curve(p, 10.0, 50.0, {0.02, 0.4}, 4, 2);
    for (int i = 0; i < 4; ++i) {
        REQUIRE(local[i].ok);
        REQUIRE(nl10[i].ok);
        REQUIRE(nl50[i].ok);
        if (local[i].alpha <= 0.0499) {  // left of the temporal Hopf point
            CHECK_FALSE(local[i].oscillatory);
            CHECK(local[i].d1_critical < nl50[i].d1_critical);
            CHECK(nl50[i].d1_critical < nl10[i].d1_critical);
        } else {  // right of it
            CHECK(local[i].oscillatory);
            CHECK(local[i].d1_critical < nl10[i].d1_critical);
            CHECK(nl10[i].d1_critical < nl50[i].d1_critical);
        }
    }
    // The delta = 0 curve passes through the local threshold at alpha = 0.04.
    CHECK(std::fabs(nl10[1].alpha - 0.04) < 1e-12);
    CHECK(std::fabs(local[1].d1_critical - 0.1695) < 1e-3);
}

TEST_CASE("boundary front speeds from the closed forms") {
    const ModelParams p = baseline_params(0.04);

    const auto pred = wavespeed_boundary(p, {1.0, 10.0, 0.0}, WaveTarget::PredatorFreeFront);
    CHECK(std::fabs(pred.speed_min - 1.414) < 1e-3);
    CHECK(pred.K_at_min == doctest::Approx(std::sqrt(p.s / 10.0)));

    const auto prey = wavespeed_boundary(p, {1.0, 10.0, 0.0}, WaveTarget::PreyFreeFront);
    CHECK(std::fabs(prey.speed_min - 1.92) < 5e-3);

    // Speed homogeneity: doubling d2 scales the predator-free speed by sqrt(2).
    const auto pred2 = wavespeed_boundary(p, {1.0, 20.0, 0.0}, WaveTarget::PredatorFreeFront);
    CHECK(pred2.speed_min == doctest::Approx(pred.speed_min * std::sqrt(2.0)).epsilon(1e-12));

    // E2 stable: prey-free front undefined.
    ModelParams stable = p;
    stable.c = 1.0;
    CHECK_THROWS(wavespeed_boundary(stable, {1.0, 10.0, 0.0}, WaveTarget::PreyFreeFront));
}

TEST_CASE("coexistence speed: real-exponent branch when tr J > 0") {
    const ModelParams p = baseline_params(0.1);
    const SpatialParams sp{1.0, 10.0, 0.0};
    const auto eq = unique_interior_equilibrium(p);
    const double tr = eq.jacobian.trace();
    REQUIRE(tr > 0.0);
    const auto w = wavespeed_coexistence(p, sp);
    CHECK(w.K_at_min == doctest::Approx(std::sqrt(tr / (sp.d1 + sp.d2))).epsilon(1e-12));
    CHECK(w.speed_min == doctest::Approx(std::sqrt(tr * (sp.d1 + sp.d2))).epsilon(1e-12));
    CHECK(w.q_at_min == 0.0);
}

TEST_CASE("coexistence saddle point: delta = 0 equals the local-form value") {
    const ModelParams p = baseline_params(0.04);
    const auto a = wavespeed_coexistence(p, {1.0, 10.0, 0.0});
    const auto b = wavespeed_coexistence(p, {1.0, 10.0, 1e-9});
    CHECK(std::fabs(a.speed_min - b.speed_min) < 1e-6);
    CHECK(a.speed_min > 0.0);
}
