#include "coophunt/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace coophunt {

void OdeOptions::validate() const {
    if (!(rel_tol >= 1e-12 && rel_tol <= 1e-3))
        throw std::invalid_argument("OdeOptions: rel_tol outside [1e-12, 1e-3]");
    if (!(abs_tol >= 1e-12 && abs_tol <= 1e-3))
        throw std::invalid_argument("OdeOptions: abs_tol outside [1e-12, 1e-3]");
}

std::string Trajectory::to_csv() const {
    std::string out = "t,u,v\n";
    char buf[96];
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", times[i], states[i].u,
                      states[i].v);
        out += buf;
    }
    return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights (Hairer & Wanner).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

struct V2 {
    double a, b;
};
inline V2 operator+(V2 x, V2 y) { return {x.a + y.a, x.b + y.b}; }
inline V2 operator-(V2 x, V2 y) { return {x.a - y.a, x.b - y.b}; }
inline V2 operator*(double s, V2 x) { return {s * x.a, s * x.b}; }

inline V2 tov(const State2& s) { return {s.u, s.v}; }
inline State2 tos(V2 v) { return {v.a, v.b}; }

struct DenseCoeffs {
    V2 r1, r2, r3, r4, r5;
    double t, h;

    State2 eval(double tq) const {
        const double th = (tq - t) / h;
        const double th1 = 1.0 - th;
        const V2 y = r1 + th * (r2 + th1 * (r3 + th * (r4 + th1 * r5)));
        return tos(y);
    }
};

}  // namespace

IntegrationReport integrate_dense(const Rhs2& f, const State2& y0, double t0, double t1,
                                  std::span<const double> sample_times,
                                  std::vector<State2>& out, const OdeOptions& opts) {
    opts.validate();
    IntegrationReport rep;
    out.clear();
    out.reserve(sample_times.size());

    auto rhs = [&](double t, V2 y) { return tov(f(t, tos(y))); };

    V2 y = tov(y0);
    double t = t0;
    V2 k1 = rhs(t, y);
    double h = std::min(opts.initial_step, t1 - t0);
    std::size_t isample = 0;
    int pos_rejects = 0;

    while (t < t1) {
        if (rep.steps_accepted + rep.steps_rejected > opts.max_steps) {
            rep.status = IntegrationStatus::MaxSteps;
            rep.t_reached = t;
            return rep;
        }
        h = std::min(h, t1 - t);
        if (h < opts.min_step) {
            rep.status = IntegrationStatus::StepUnderflow;
            rep.t_reached = t;
            return rep;
        }

        const V2 k2 = rhs(t + h / 5.0, y + h * (a21 * k1));
        const V2 k3 = rhs(t + 3.0 * h / 10.0, y + h * (a31 * k1 + a32 * k2));
        const V2 k4 = rhs(t + 4.0 * h / 5.0, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const V2 k5 =
            rhs(t + 8.0 * h / 9.0, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const V2 k6 =
            rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const V2 ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const V2 k7 = rhs(t + h, ynew);  // FSAL

        if (!std::isfinite(ynew.a) || !std::isfinite(ynew.b)) {
            rep.status = IntegrationStatus::NonFinite;
            rep.t_reached = t;
            return rep;
        }

        const V2 errv =
            h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        auto comp = [&](double e, double y0c, double y1c) {
            const double sc =
                opts.abs_tol + opts.rel_tol * std::max(std::fabs(y0c), std::fabs(y1c));
            return e / sc;
        };
        const double eu = comp(errv.a, y.a, ynew.a);
        const double ev = comp(errv.b, y.b, ynew.b);
        const double err = std::sqrt(0.5 * (eu * eu + ev * ev));

        bool accept = err <= 1.0;
        if (accept && opts.enforce_positive && (ynew.a < 0.0 || ynew.b < 0.0) &&
            pos_rejects < opts.positivity_retries) {
            accept = false;
            ++pos_rejects;
            ++rep.steps_rejected;
            h *= 0.5;
            continue;
        }

        if (accept) {
            pos_rejects = 0;
            ++rep.steps_accepted;
            DenseCoeffs dc;
            dc.t = t;
            dc.h = h;
            const V2 dy = ynew - y;
            dc.r1 = y;
            dc.r2 = dy;
            dc.r3 = h * k1 - dy;
            dc.r4 = dy - h * k7 - dc.r3;
            dc.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
            while (isample < sample_times.size() && sample_times[isample] <= t + h) {
                out.push_back(dc.eval(std::max(sample_times[isample], t)));
                ++isample;
            }
            t += h;
            y = ynew;
            k1 = k7;
        } else {
            ++rep.steps_rejected;
        }

        const double fac =
            (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);
    }

    // Times exactly at t1 (or trailing round-off stragglers).
    while (isample < sample_times.size()) {
        out.push_back(tos(y));
        ++isample;
    }
    rep.t_reached = t;
    return rep;
}

namespace {

Trajectory run_model(const State2& x0, const ModelParams& p, double t_end, double rel,
                     double abs, double sample_dt, double sign) {
    p.validate();
    if (!(x0.u > 0.0 && x0.v > 0.0))
        throw std::invalid_argument("integrate: initial state must be componentwise positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be positive");

    std::vector<double> ts;
    const std::size_t nsmp = static_cast<std::size_t>(std::floor(t_end / sample_dt));
    ts.reserve(nsmp + 2);
    for (std::size_t i = 0; i <= nsmp; ++i) ts.push_back(static_cast<double>(i) * sample_dt);
    if (ts.back() < t_end) ts.push_back(t_end);

    OdeOptions opts;
    opts.rel_tol = rel;
    opts.abs_tol = abs;

    auto rhs = [&p, sign](double, const State2& y) {
        const State2 r = reaction_rates(y, p);
        return State2{sign * r.u, sign * r.v};
    };

    Trajectory traj;
    traj.params = p;
    const auto rep = integrate_dense(rhs, x0, 0.0, t_end, ts, traj.states, opts);
    if (rep.status == IntegrationStatus::NonFinite)
        throw std::runtime_error("integrate: non-finite state at t=" +
                                 std::to_string(rep.t_reached));
    if (rep.status == IntegrationStatus::StepUnderflow)
        throw std::runtime_error("integrate: step-size underflow at t=" +
                                 std::to_string(rep.t_reached));
    if (rep.status == IntegrationStatus::MaxSteps)
        throw std::runtime_error("integrate: step budget exhausted at t=" +
                                 std::to_string(rep.t_reached));
    traj.times = std::move(ts);
    return traj;
}

}  // namespace

Trajectory integrate(const State2& x0, const ModelParams& p, double t_end, double rel_tol,
                     double abs_tol, double sample_dt) {
    return run_model(x0, p, t_end, rel_tol, abs_tol, sample_dt, +1.0);
}

Trajectory integrate_reversed(const State2& x0, const ModelParams& p, double t_end,
                              double rel_tol, double abs_tol, double sample_dt) {
    return run_model(x0, p, t_end, rel_tol, abs_tol, sample_dt, -1.0);
}

}  // namespace coophunt
