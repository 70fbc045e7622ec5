#include <doctest.h>

#include <cmath>

#include "coophunt/temporal.hpp"

using namespace coophunt;

namespace {

ModelParams with_gamma(double g) {
    ModelParams p = baseline_params(0.04);
    p.gamma = g;
    return p;
}

// Symmetric sampled Hausdorff distance between two polylines.
double hausdorff(const std::vector<State2>& a, const std::vector<State2>& b) {
    auto one_sided = [](const std::vector<State2>& from, const std::vector<State2>& to) {
        double worst = 0.0;
        for (const auto& p : from) {
            double best = 1e300;
            for (const auto& q : to)
                best = std::min(best, std::hypot(p.u - q.u, p.v - q.v));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace

TEST_CASE("stable limit cycle at gamma = 0.05") {
    const ModelParams p = with_gamma(0.05);
    const State2 eq = unique_interior_equilibrium(p).point;
    const auto det = detect_limit_cycle(p, {eq.u * 1.02, eq.v}, TimeDirection::Forward);
    REQUIRE(det.outcome == CycleOutcome::Cycle);
    CHECK(det.report.stability == CycleStability::Stable);
    CHECK(det.report.period > 0.0);
    CHECK(det.report.u_min < det.report.u_max);
    CHECK(det.report.u_max - det.report.u_min > 0.5);  // O(1) relaxation cycle
}

TEST_CASE("baseline (gamma = 0.08) converges to the coexistence point") {
    const ModelParams p = baseline_params(0.04);
    const State2 eq = unique_interior_equilibrium(p).point;
    const auto det = detect_limit_cycle(p, {eq.u * 1.3, eq.v * 0.8}, TimeDirection::Forward);
    CHECK(det.outcome == CycleOutcome::ConvergedToPoint);
}

TEST_CASE("gamma = 0.009: unstable cycle inside a stable cycle") {
    const ModelParams p = with_gamma(0.009);
    const EquilibriumReport eq = unique_interior_equilibrium(p);
    CHECK(eq.is_stable());

    const auto unstable =
        detect_limit_cycle(p, {eq.point.u * 1.05, eq.point.v}, TimeDirection::Backward);
    REQUIRE(unstable.outcome == CycleOutcome::Cycle);
    CHECK(unstable.report.stability == CycleStability::Unstable);

    const auto stable =
        detect_limit_cycle(p, {eq.point.u * 3.0, eq.point.v * 1.5}, TimeDirection::Forward);
    REQUIRE(stable.outcome == CycleOutcome::Cycle);
    CHECK(stable.report.stability == CycleStability::Stable);

    // Strictly nested u-amplitude intervals.
    CHECK(stable.report.u_min < unstable.report.u_min);
    CHECK(unstable.report.u_max < stable.report.u_max);
}

TEST_CASE("time-reversal duality: forward orbits leave the unstable cycle") {
    const ModelParams p = with_gamma(0.009);
    const EquilibriumReport eq = unique_interior_equilibrium(p);
    const auto unstable =
        detect_limit_cycle(p, {eq.point.u * 1.05, eq.point.v}, TimeDirection::Backward);
    REQUIRE(unstable.outcome == CycleOutcome::Cycle);

    // Seed just inside the unstable cycle: the forward orbit must fall into
    // the equilibrium, i.e. end far inside the cycle's u-band.
    const double u_seed = 0.5 * (unstable.report.u_min + eq.point.u);
    const Trajectory tr = integrate({u_seed, eq.point.v}, p, 2e4, 1e-9, 1e-12, 5.0);
    const State2 last = tr.states.back();
    CHECK(std::hypot(last.u - eq.point.u, last.v - eq.point.v) <
          0.2 * (unstable.report.u_max - unstable.report.u_min));
}

TEST_CASE("heteroclinic orbits from E1 and E2 reach the coexistence point") {
    const ModelParams p = baseline_params(0.04);
    for (const SourcePoint src : {SourcePoint::E1, SourcePoint::E2}) {
        const auto trace = trace_heteroclinic(src, p, 1e-6);
        CHECK(trace.terminal == OmegaLimit::InteriorPoint);
        CHECK(std::fabs(trace.terminal_point.u - 0.443) < 1e-3);
        CHECK(std::fabs(trace.terminal_point.v - 5.662) < 1e-3);
    }
}

TEST_CASE("E2 launch direction lies on the unstable eigenspace v - 0.125 = 0.643 u") {
    const auto trace = trace_heteroclinic(SourcePoint::E2, baseline_params(0.04), 1e-6);
    const double slope = trace.launch_direction.v / trace.launch_direction.u;
    CHECK(slope == doctest::Approx(0.643).epsilon(1e-3));
}

TEST_CASE("orbit from E0 passes near E1 before settling at the interior point") {
    const double offset = 1e-6;
    const auto trace = trace_heteroclinic(SourcePoint::E0, baseline_params(0.04), offset);
    CHECK(trace.terminal == OmegaLimit::InteriorPoint);
    CHECK(trace.min_distance_to_E1 < 10.0 * offset);
}

TEST_CASE("heteroclinic orbit is offset-insensitive after the initial segment") {
    const ModelParams p = baseline_params(0.04);
    const auto a = trace_heteroclinic(SourcePoint::E1, p, 1e-6);
    const auto b = trace_heteroclinic(SourcePoint::E1, p, 1e-7);
    auto clip = [](const Trajectory& tr) {
        // Keep the part beyond a small ball around the source.
        std::vector<State2> pts;
        for (std::size_t i = 0; i < tr.size(); i += 4) {
            const State2& x = tr.states[i];
            if (std::hypot(x.u - 1.0, x.v) > 0.05) pts.push_back(x);
        }
        return pts;
    };
    CHECK(hausdorff(clip(a.trajectory), clip(b.trajectory)) < 1e-3);
}

TEST_CASE("non-saddle source is rejected") {
    ModelParams p = baseline_params(0.04);
    p.c = 1.0;  // E2 stable here
    CHECK_THROWS_AS(trace_heteroclinic(SourcePoint::E2, p, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(trace_heteroclinic(SourcePoint::E1, baseline_params(), 1e-2),
                    std::invalid_argument);
}

TEST_CASE("heteroclinic orbits reach the stable cycle when alpha = 0.1") {
    const auto trace = trace_heteroclinic(SourcePoint::E1, baseline_params(0.1), 1e-6);
    CHECK(trace.terminal == OmegaLimit::InteriorCycle);
}
