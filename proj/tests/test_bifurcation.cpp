#include <doctest.h>

#include <cmath>

#include "coophunt/bifurcation.hpp"

using namespace coophunt;

TEST_CASE("Hopf threshold in alpha near 0.0499") {
    const auto th =
        hopf_threshold(baseline_params(), ScanParameter::Alpha, {0.01, 0.2});
    CHECK(std::fabs(th.value - 0.0499) < 1e-3);
    CHECK(th.residual < 1e-8);

    // Purely imaginary pair +-i*sqrt(D2) at the threshold.
    const auto eq =
        unique_interior_equilibrium(with_parameter(baseline_params(), ScanParameter::Alpha, th.value));
    CHECK(std::fabs(eq.eigenvalues.first.real()) < 1e-8);
    CHECK(eq.eigenvalues.first.imag() ==
          doctest::Approx(std::sqrt(eq.jacobian.det())).epsilon(1e-8));
}

TEST_CASE("Hopf transversality: Re(lambda) crosses with nonzero slope") {
    const auto th = hopf_threshold(baseline_params(), ScanParameter::Alpha, {0.01, 0.2});
    const double h = 1e-4;
    auto re_at = [&](double a) {
        return unique_interior_equilibrium(
                   with_parameter(baseline_params(), ScanParameter::Alpha, a))
            .eigenvalues.first.real();
    };
    const double slope = (re_at(th.value + h) - re_at(th.value - h)) / (2.0 * h);
    CHECK(std::fabs(slope) > 1e-6);
}

TEST_CASE("no sign change is an error") {
    CHECK_THROWS(hopf_threshold(baseline_params(), ScanParameter::Alpha, {0.2, 0.4}));
}

TEST_CASE("transcritical thresholds in c and gamma") {
    const auto tc_c = transcritical_threshold(baseline_params(0.04), ScanParameter::C);
    CHECK(std::fabs(tc_c.value - 0.637) < 1e-3);
    CHECK(tc_c.residual < 1e-10);

    const auto tc_g = transcritical_threshold(baseline_params(0.04), ScanParameter::Gamma);
    CHECK(std::fabs(tc_g.value - 0.0066) < 1e-4);
    CHECK(tc_g.residual < 1e-10);

    CHECK_THROWS_AS(transcritical_threshold(baseline_params(), ScanParameter::Alpha),
                    std::invalid_argument);
}

TEST_CASE("E2 Jacobian entry b11 vanishes at the transcritical point") {
    const auto tc = transcritical_threshold(baseline_params(0.04), ScanParameter::C);
    const ModelParams q = with_parameter(baseline_params(0.04), ScanParameter::C, tc.value);
    const Mat2 J = jacobian({0.0, q.beta / q.gamma}, q);
    CHECK(std::fabs(J.a11) < 1e-10);
}

TEST_CASE("exchange of stability across the transcritical point") {
    const auto tc = transcritical_threshold(baseline_params(0.04), ScanParameter::Gamma);
    const double eps = 1e-4;
    const ModelParams below =
        with_parameter(baseline_params(0.04), ScanParameter::Gamma, tc.value - eps);
    const ModelParams above =
        with_parameter(baseline_params(0.04), ScanParameter::Gamma, tc.value + eps);
    CHECK(boundary_equilibria(below)[2].is_stable());
    CHECK_FALSE(boundary_equilibria(above)[2].is_stable());
    // Interior branch exists on the unstable-E2 side only.
    CHECK(interior_equilibria(above).points.size() == 1);
    CHECK(interior_equilibria(below).points.empty());
}

TEST_CASE("saddle-node scan over baseline alpha range is empty") {
    const auto list = saddle_node_scan(baseline_params(), {0.01, 0.5}, 1000);
    CHECK(list.empty());
}

TEST_CASE("saddle-node scan recovers a fold pair") {
    // This parameter set has interior roots appearing and vanishing in a
    // fold pair near alpha ~ 11.8 and ~ 11.96 (1 -> 3 -> 1 roots).
    ModelParams p = baseline_params();
    p.c = 0.1190;
    p.m = 0.1970;
    p.gamma = 0.1725;
    p.beta = 0.0527;

    const auto list = saddle_node_scan(p, {10.0, 13.0}, 200);
    REQUIRE(list.size() >= 2);
    for (const auto& th : list) {
        CHECK(th.residual < 1e-8);
        const ModelParams q = with_parameter(p, ScanParameter::Alpha, th.value);
        CHECK(interior_equilibria(q).degenerate);
    }
}

TEST_CASE("branch diagram: stable branch then cycles across the alpha Hopf point") {
    BranchOptions opts;
    opts.workers = 4;
    opts.cycle_t_end = 6000.0;
    const auto diag =
        branch_diagram(baseline_params(), ScanParameter::Alpha, {0.01, 0.2}, 24, opts);
    bool stable_below = true, cycle_above = false;
    for (const auto& bp : diag.points) {
        if (bp.branch_id < 3) continue;
        if (bp.parameter < 0.045 && bp.stability != StabilityClass::StableFocus &&
            bp.stability != StabilityClass::StableNode)
            stable_below = false;
        if (bp.parameter > 0.06 && bp.has_cycle) cycle_above = true;
    }
    CHECK(stable_below);
    CHECK(cycle_above);
    const std::string csv = diag.to_csv();
    CHECK(csv.rfind("param,branch_id,u,v,stability,", 0) == 0);
}

TEST_CASE("branch diagram: interior branch absent below the gamma transcritical point") {
    BranchOptions opts;
    opts.attach_cycles = false;
    const auto diag = branch_diagram(baseline_params(0.04), ScanParameter::Gamma,
                                     {0.001, 0.005}, 10, opts);
    for (const auto& bp : diag.points) {
        CHECK(bp.branch_id < 3);  // no interior branch here
        if (bp.branch_id == 2) CHECK(bp.stability == StabilityClass::StableNode);
    }
}
