#ifndef COOPHUNT_TEMPORAL_HPP
#define COOPHUNT_TEMPORAL_HPP

#include <optional>

#include "coophunt/ode.hpp"

namespace coophunt {

enum class TimeDirection { Forward, Backward };

enum class CycleStability { Stable, Unstable };

struct LimitCycleReport {
    bool exists = false;
    double period = 0.0;
    double u_min = 0.0, u_max = 0.0;
    double v_min = 0.0, v_max = 0.0;
    CycleStability stability = CycleStability::Stable;
};

enum class CycleOutcome { Cycle, ConvergedToPoint, Inconclusive };

struct CycleDetection {
    CycleOutcome outcome = CycleOutcome::Inconclusive;
    LimitCycleReport report;          // meaningful when outcome == Cycle
    State2 final_state;
    double maxima_spread = 0.0;       // relative spread of the last u-maxima
};

struct CycleOptions {
    double t_end = 2e4;        // periods near Hopf thresholds are O(10^2)
    double sample_dt = 0.25;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double spread_tol = 1e-4;  // max relative spread of successive u-maxima
};

/// Integrates in the requested time direction, discards the first half as
/// transient, and tests the tail for periodicity via successive maxima of u.
/// Backward integration makes unstable cycles attracting.
CycleDetection detect_limit_cycle(const ModelParams& p, const State2& seed,
                                  TimeDirection direction,
                                  const CycleOptions& opts = {});

enum class SourcePoint { E0, E1, E2 };

enum class OmegaLimit { InteriorPoint, InteriorCycle, Other };

struct HeteroclinicTrace {
    Trajectory trajectory;
    OmegaLimit terminal = OmegaLimit::Other;
    State2 terminal_point;
    double min_distance_to_E1 = 0.0;  // route diagnostic for launches from E0
    State2 launch_direction;
};

struct HeteroclinicOptions {
    double t_end = 6000.0;
    double sample_dt = 0.25;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
};

/// Launches from the source equilibrium displaced by offset along the unit
/// unstable eigenvector oriented into the positive quadrant and labels the
/// omega-limit set.
HeteroclinicTrace trace_heteroclinic(SourcePoint source, const ModelParams& p,
                                     double offset,
                                     const HeteroclinicOptions& opts = {});

}  // namespace coophunt

#endif
