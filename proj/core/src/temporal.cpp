#include "coophunt/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coophunt {

namespace {

struct Peak {
    double t, value;
};

// Local maxima of the sampled signal, refined by fitting a parabola
// through the three samples around each peak.
std::vector<Peak> find_maxima(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<Peak> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] >= y[i - 1] && y[i] > y[i + 1]) {
            const double d1 = y[i] - y[i - 1];
            const double d2 = y[i + 1] - y[i];
            const double denom = d1 - d2;
            double frac = 0.0;
            if (denom > 0.0) frac = d1 / denom - 0.5;
            frac = std::clamp(frac, -0.5, 0.5);
            const double dt = t[i] - t[i - 1];
            out.push_back({t[i] + frac * dt, y[i] + 0.5 * d1 * frac});
        }
    }
    return out;
}

double nearest_equilibrium_distance(const ModelParams& p, const State2& x) {
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](const State2& e) {
        best = std::min(best, std::hypot(x.u - e.u, x.v - e.v));
    };
    consider({0.0, 0.0});
    consider({1.0, 0.0});
    consider({0.0, p.beta / p.gamma});
    for (const auto& r : interior_equilibria(p).points) consider(r.point);
    return best;
}

}  // namespace

CycleDetection detect_limit_cycle(const ModelParams& p, const State2& seed,
                                  TimeDirection direction, const CycleOptions& opts) {
    p.validate();
    if (!(seed.u > 0.0 && seed.v > 0.0))
        throw std::invalid_argument("detect_limit_cycle: seed must lie in the positive quadrant");

    const bool backward = direction == TimeDirection::Backward;
    const Trajectory traj =
        backward ? integrate_reversed(seed, p, opts.t_end, opts.rel_tol, opts.abs_tol,
                                      opts.sample_dt)
                 : integrate(seed, p, opts.t_end, opts.rel_tol, opts.abs_tol, opts.sample_dt);

    // Transient discard: first half of the budget.
    std::vector<double> ts, us;
    std::vector<State2> tail;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (traj.times[i] < 0.5 * opts.t_end) continue;
        ts.push_back(traj.times[i]);
        us.push_back(traj.states[i].u);
        tail.push_back(traj.states[i]);
    }

    CycleDetection det;
    det.final_state = traj.states.back();

    const double eq_dist = nearest_equilibrium_distance(p, det.final_state);
    const auto peaks = find_maxima(ts, us);

    const double u_scale = std::max(1.0, std::fabs(det.final_state.u));
    double tail_amp = 0.0;
    {
        auto [lo, hi] = std::minmax_element(us.begin(), us.end());
        tail_amp = *hi - *lo;
    }

    if (peaks.size() < 6 || tail_amp < 1e-7 * u_scale) {
        det.outcome = eq_dist < 1e-5 ? CycleOutcome::ConvergedToPoint
                                     : CycleOutcome::Inconclusive;
        return det;
    }

    const std::size_t n = peaks.size();
    double pmin = peaks[n - 6].value, pmax = pmin;
    for (std::size_t i = n - 6; i < n; ++i) {
        pmin = std::min(pmin, peaks[i].value);
        pmax = std::max(pmax, peaks[i].value);
    }
    det.maxima_spread = (pmax - pmin) / std::max(std::fabs(pmax), 1e-300);

    if (det.maxima_spread < opts.spread_tol) {
        const double t_from = peaks[n - 6].t;
        LimitCycleReport& r = det.report;
        r.exists = true;
        r.period = (peaks[n - 1].t - peaks[n - 6].t) / 5.0;
        r.u_min = r.u_max = tail.back().u;
        r.v_min = r.v_max = tail.back().v;
        for (std::size_t i = 0; i < tail.size(); ++i) {
            if (ts[i] < t_from) continue;
            r.u_min = std::min(r.u_min, tail[i].u);
            r.u_max = std::max(r.u_max, tail[i].u);
            r.v_min = std::min(r.v_min, tail[i].v);
            r.v_max = std::max(r.v_max, tail[i].v);
        }
        r.stability = backward ? CycleStability::Unstable : CycleStability::Stable;
        det.outcome = CycleOutcome::Cycle;
        return det;
    }

    det.outcome = eq_dist < 1e-5 ? CycleOutcome::ConvergedToPoint
                                 : CycleOutcome::Inconclusive;
    return det;
}

HeteroclinicTrace trace_heteroclinic(SourcePoint source, const ModelParams& p,
                                     double offset, const HeteroclinicOptions& opts) {
    p.validate();
    if (!(offset >= 1e-8 && offset <= 1e-4))
        throw std::invalid_argument("trace_heteroclinic: offset outside [1e-8, 1e-4]");

    State2 origin, dir;
    switch (source) {
        case SourcePoint::E0:
            // Both eigendirections are unstable; the diagonal enters the
            // positive quadrant and picks up the fast prey direction.
            origin = {0.0, 0.0};
            dir = {M_SQRT1_2, M_SQRT1_2};
            break;
        case SourcePoint::E1: {
            origin = {1.0, 0.0};
            // Unstable eigenvector for eigenvalue s.
            const double du = -p.c / ((1.0 + p.s) * (1.0 + p.m));
            const double norm = std::hypot(du, 1.0);
            dir = {du / norm, 1.0 / norm};
            break;
        }
        case SourcePoint::E2: {
            const double b11 =
                1.0 - p.c * p.beta * (p.gamma + p.alpha * p.beta) / (p.m * p.gamma * p.gamma);
            if (b11 <= 0.0)
                throw std::invalid_argument(
                    "trace_heteroclinic: E2 is not a saddle (m*gamma^2 <= c*beta*(gamma+alpha*beta))");
            origin = {0.0, p.beta / p.gamma};
            const double dv = p.s / (p.gamma * (p.s + b11));
            const double norm = std::hypot(1.0, dv);
            dir = {1.0 / norm, dv / norm};
            break;
        }
    }

    HeteroclinicTrace out;
    out.launch_direction = dir;
    const State2 x0{origin.u + offset * dir.u, origin.v + offset * dir.v};
    out.trajectory =
        integrate(x0, p, opts.t_end, opts.rel_tol, opts.abs_tol, opts.sample_dt);

    out.min_distance_to_E1 = std::numeric_limits<double>::infinity();
    for (const State2& x : out.trajectory.states)
        out.min_distance_to_E1 =
            std::min(out.min_distance_to_E1, std::hypot(x.u - 1.0, x.v));

    // Label the omega-limit from the last fifth of the orbit.
    const auto& T = out.trajectory;
    const double t_tail = T.times.back() - 0.2 * opts.t_end;
    State2 mean{0, 0};
    std::size_t cnt = 0;
    double dev = 0.0;
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (T.times[i] < t_tail) continue;
        mean.u += T.states[i].u;
        mean.v += T.states[i].v;
        ++cnt;
    }
    mean.u /= static_cast<double>(cnt);
    mean.v /= static_cast<double>(cnt);
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (T.times[i] < t_tail) continue;
        dev = std::max(dev, std::hypot(T.states[i].u - mean.u, T.states[i].v - mean.v));
    }
    out.terminal_point = T.states.back();

    const auto interior = interior_equilibria(p).points;
    double dist_to_interior = std::numeric_limits<double>::infinity();
    for (const auto& r : interior)
        dist_to_interior = std::min(
            dist_to_interior, std::hypot(mean.u - r.point.u, mean.v - r.point.v));

    if (dev < 1e-4 && dist_to_interior < 1e-3) {
        out.terminal = OmegaLimit::InteriorPoint;
    } else if (dev >= 1e-4) {
        // Oscillatory tail enclosing the interior point reads as a cycle.
        bool encloses = false;
        for (const auto& r : interior) {
            double ulo = 1e300, uhi = -1e300;
            for (std::size_t i = 0; i < T.size(); ++i) {
                if (T.times[i] < t_tail) continue;
                ulo = std::min(ulo, T.states[i].u);
                uhi = std::max(uhi, T.states[i].u);
            }
            if (ulo < r.point.u && r.point.u < uhi) encloses = true;
        }
        out.terminal = encloses ? OmegaLimit::InteriorCycle : OmegaLimit::Other;
    } else {
        out.terminal = OmegaLimit::Other;
    }
    return out;
}

}  // namespace coophunt
