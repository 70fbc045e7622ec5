#ifndef COOPHUNT_ODE_HPP
#define COOPHUNT_ODE_HPP

#include <functional>
#include <span>
#include <vector>

#include "coophunt/model.hpp"

namespace coophunt {

struct OdeOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double initial_step = 1e-4;
    double min_step = 1e-13;
    std::size_t max_steps = 100'000'000;
    // Reject steps that leave the positive quadrant; the retry budget
    // guards against stalling on orbits that graze an axis.
    bool enforce_positive = true;
    int positivity_retries = 40;

    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<State2> states;
    ModelParams params;

    std::size_t size() const { return times.size(); }
    /// "t,u,v" rows, LF-terminated.
    std::string to_csv() const;
};

enum class IntegrationStatus { Ok, StepUnderflow, NonFinite, MaxSteps };

struct IntegrationReport {
    IntegrationStatus status = IntegrationStatus::Ok;
    double t_reached = 0.0;
    std::size_t steps_accepted = 0;
    std::size_t steps_rejected = 0;
};

using Rhs2 = std::function<State2(double, const State2&)>;

/// Adaptive Dormand-Prince 5(4) with 4th-order dense output. Samples the
/// dense interpolant at caller-requested times (strictly increasing,
/// inside [t0, t1]).
IntegrationReport integrate_dense(const Rhs2& f, const State2& y0, double t0, double t1,
                                  std::span<const double> sample_times,
                                  std::vector<State2>& out, const OdeOptions& opts);

/// Convenience wrapper for the temporal model: uniform samples every
/// sample_dt plus the final time.
Trajectory integrate(const State2& x0, const ModelParams& p, double t_end,
                     double rel_tol = 1e-9, double abs_tol = 1e-12,
                     double sample_dt = 0.1);

/// Same but integrating the time-reversed flow (for unstable structures).
Trajectory integrate_reversed(const State2& x0, const ModelParams& p, double t_end,
                              double rel_tol = 1e-9, double abs_tol = 1e-12,
                              double sample_dt = 0.1);

}  // namespace coophunt

#endif
