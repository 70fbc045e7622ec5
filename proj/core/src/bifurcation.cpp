#include "coophunt/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "coophunt/parallel.hpp"

namespace coophunt {

const char* to_string(ScanParameter p) {
    switch (p) {
        case ScanParameter::Alpha: return "alpha";
        case ScanParameter::Gamma: return "gamma";
        case ScanParameter::C: return "c";
    }
    return "?";
}

ModelParams with_parameter(const ModelParams& p, ScanParameter which, double value) {
    ModelParams q = p;
    switch (which) {
        case ScanParameter::Alpha: q.alpha = value; break;
        case ScanParameter::Gamma: q.gamma = value; break;
        case ScanParameter::C: q.c = value; break;
    }
    return q;
}

namespace {

// D1 = -tr J(E*) as a function of the scanned parameter; requires a unique
// interior equilibrium.
double d1_at(const ModelParams& p, ScanParameter which, double value) {
    const auto eq = unique_interior_equilibrium(with_parameter(p, which, value));
    return -eq.jacobian.trace();
}

double transcritical_residual(const ModelParams& p) {
    return std::fabs(p.m * p.gamma * p.gamma -
                     p.c * p.beta * (p.gamma + p.alpha * p.beta));
}

}  // namespace

ThresholdResult hopf_threshold(const ModelParams& p, ScanParameter which,
                               std::pair<double, double> bracket) {
    p.validate();
    double a = bracket.first, b = bracket.second;
    if (!(a < b)) throw std::invalid_argument("hopf_threshold: empty bracket");
    double fa = d1_at(p, which, a);
    double fb = d1_at(p, which, b);
    if (fa == 0.0) std::swap(a, b), std::swap(fa, fb);
    if (fa * fb > 0.0)
        throw std::runtime_error("hopf_threshold: D1 does not change sign over the bracket");

    // Bisection with a secant proposal when it stays inside the bracket.
    double x = a, fx = fa;
    for (int it = 0; it < 200 && std::fabs(fx) > 1e-14; ++it) {
        double xs = (fb != fa) ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
        const double xm = 0.5 * (a + b);
        if (!(xs > a && xs < b)) xs = xm;
        x = xs;
        fx = d1_at(p, which, x);
        if (fa * fx <= 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        if (b - a < 1e-15 * std::max(1.0, std::fabs(b))) break;
    }

    const auto eq = unique_interior_equilibrium(with_parameter(p, which, x));
    if (eq.jacobian.det() <= 0.0)
        throw std::runtime_error("hopf_threshold: D2 <= 0 at the root (degenerate, non-Hopf)");
    return {which, x, ThresholdKind::Hopf, std::fabs(d1_at(p, which, x))};
}

ThresholdResult transcritical_threshold(const ModelParams& p, ScanParameter which) {
    p.validate();
    double value;
    if (which == ScanParameter::C) {
        value = p.m * p.gamma * p.gamma / (p.beta * (p.gamma + p.alpha * p.beta));
    } else if (which == ScanParameter::Gamma) {
        // m g^2 - c beta g - c alpha beta^2 = 0, positive root.
        const double A = p.m, B = -p.c * p.beta, C = -p.c * p.alpha * p.beta * p.beta;
        const double disc = B * B - 4.0 * A * C;
        if (disc < 0.0)
            throw std::runtime_error("transcritical_threshold: no positive root in gamma");
        value = (-B + std::sqrt(disc)) / (2.0 * A);
        if (value <= 0.0)
            throw std::runtime_error("transcritical_threshold: no positive root in gamma");
    } else {
        throw std::invalid_argument("transcritical_threshold: closed form exists for c and gamma only");
    }
    const ModelParams q = with_parameter(p, which, value);
    return {which, value, ThresholdKind::Transcritical, transcritical_residual(q)};
}

std::vector<ThresholdResult> saddle_node_scan(const ModelParams& p,
                                              std::pair<double, double> alpha_range, int n) {
    p.validate();
    if (n < 2) throw std::invalid_argument("saddle_node_scan: n >= 2 required");

    auto count_at = [&](double a) {
        return interior_equilibria(with_parameter(p, ScanParameter::Alpha, a)).points.size();
    };

    std::vector<ThresholdResult> out;
    const double lo = alpha_range.first, hi = alpha_range.second;
    double prev_a = lo;
    std::size_t prev_n = count_at(lo);
    for (int i = 1; i < n; ++i) {
        const double a = lo + (hi - lo) * i / (n - 1);
        const std::size_t cnt = count_at(a);
        if (cnt != prev_n) {
            // Tighten the bracket on the count change.
            double x0 = prev_a, x1 = a;
            for (int it = 0; it < 100 && x1 - x0 > 1e-13 * std::max(1.0, x1); ++it) {
                const double xm = 0.5 * (x0 + x1);
                if (count_at(xm) == prev_n)
                    x0 = xm;
                else
                    x1 = xm;
            }
            // At the locus R and R' share a root; Newton on (R, R')(u, alpha)
            // from the colliding pair on the richer side.
            const double a_mid = 0.5 * (x0 + x1);
            const auto side = interior_equilibria(
                with_parameter(p, ScanParameter::Alpha, prev_n > cnt ? x0 : x1));
            double u = side.points.empty() ? 0.5 : side.points.front().point.u;
            if (side.points.size() >= 2) {
                double best = 1e300;
                for (std::size_t j = 0; j + 1 < side.points.size(); ++j) {
                    const double gap =
                        side.points[j + 1].point.u - side.points[j].point.u;
                    if (gap < best) {
                        best = gap;
                        u = 0.5 * (side.points[j].point.u + side.points[j + 1].point.u);
                    }
                }
            }
            double aa = a_mid;
            for (int it = 0; it < 80; ++it) {
                const auto k = cubic_coefficients(with_parameter(p, ScanParameter::Alpha, aa));
                const double f1 = k.eval(u), f2 = k.deriv(u);
                if (std::fabs(f1) + std::fabs(f2) < 1e-16) break;
                // d/dalpha of the cubic coefficients.
                const double dA1 = p.gamma;
                const double dA2 = (p.c - p.gamma) + p.gamma * p.beta;
                const double dA3 = (p.c - p.gamma) * p.beta + p.c * p.beta;
                const double dA4 = p.c * p.beta * p.beta;
                const double dR_da = ((dA1 * u + dA2) * u + dA3) * u + dA4;
                const double dRp_da = (3.0 * dA1 * u + 2.0 * dA2) * u + dA3;
                const double dR_du = k.deriv(u);
                const double dRp_du = 6.0 * k.A1 * u + 2.0 * k.A2;
                const double det = dR_du * dRp_da - dR_da * dRp_du;
                if (det == 0.0) break;
                const double du = (f1 * dRp_da - f2 * dR_da) / det;
                const double da = (f2 * dR_du - f1 * dRp_du) / det;
                u -= du;
                aa -= da;
                if (std::fabs(du) + std::fabs(da) < 1e-16) break;
            }
            const auto k = cubic_coefficients(with_parameter(p, ScanParameter::Alpha, aa));
            out.push_back({ScanParameter::Alpha, aa, ThresholdKind::SaddleNode,
                           std::fabs(k.eval(u)) + std::fabs(k.deriv(u))});
        }
        prev_a = a;
        prev_n = cnt;
    }
    return out;
}

CriticalityResult hopf_criticality(const ModelParams& p, const ThresholdResult& th,
                                   double side_offset) {
    if (th.kind != ThresholdKind::Hopf)
        throw std::invalid_argument("hopf_criticality: threshold is not a Hopf point");
    if (!(side_offset > 0.0))
        throw std::invalid_argument("hopf_criticality: side_offset must be positive");

    // Orientation: which parameter side destabilises the equilibrium.
    const double h = std::max(1e-4 * std::fabs(th.value), 1e-7);
    const auto re_at = [&](double val) {
        const auto eq = unique_interior_equilibrium(with_parameter(p, th.parameter, val));
        return eq.eigenvalues.first.real();
    };
    const double slope = (re_at(th.value + h) - re_at(th.value - h)) / (2.0 * h);
    const double unstable_dir = slope > 0.0 ? +1.0 : -1.0;

    CriticalityResult res;

    // Supercritical probe: stable cycles on the unstable side with
    // sqrt-law amplitudes across four offsets.
    std::vector<double> ln_off, ln_amp;
    bool all_cycles = true;
    for (int k = 0; k < 4 && all_cycles; ++k) {
        const double off = side_offset * std::pow(2.0, k);
        const double val = th.value + unstable_dir * off;
        const ModelParams q = with_parameter(p, th.parameter, val);
        EquilibriumReport eq;
        try {
            eq = unique_interior_equilibrium(q);
        } catch (const std::exception&) {
            all_cycles = false;
            break;
        }
        const State2 seed{eq.point.u * 1.01, eq.point.v * 1.01};
        const auto det = detect_limit_cycle(q, seed, TimeDirection::Forward);
        if (det.outcome == CycleOutcome::Cycle &&
            det.report.stability == CycleStability::Stable) {
            ln_off.push_back(std::log(off));
            ln_amp.push_back(std::log(det.report.u_max - det.report.u_min));
        } else {
            all_cycles = false;
        }
    }
    if (all_cycles && ln_off.size() == 4) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            sx += ln_off[i];
            sy += ln_amp[i];
            sxx += ln_off[i] * ln_off[i];
            sxy += ln_off[i] * ln_amp[i];
        }
        const double b = (4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);
        res.amplitude_slope = b;
        if (std::fabs(b - 0.5) <= 0.15) {
            res.value = Criticality::Supercritical;
            return res;
        }
        res.note = "cycles found but amplitude exponent " + std::to_string(b);
    }

    // Subcritical probe: unstable cycle (time reversal) coexisting with the
    // stable equilibrium on the stable side.
    const double val = th.value - unstable_dir * side_offset;
    const ModelParams q = with_parameter(p, th.parameter, val);
    try {
        const auto eq = unique_interior_equilibrium(q);
        if (eq.is_stable()) {
            const State2 seed{eq.point.u * 1.02, eq.point.v * 1.0};
            const auto det = detect_limit_cycle(q, seed, TimeDirection::Backward);
            if (det.outcome == CycleOutcome::Cycle &&
                det.report.stability == CycleStability::Unstable) {
                res.value = Criticality::Subcritical;
                return res;
            }
        }
    } catch (const std::exception& e) {
        res.note += std::string("; subcritical probe: ") + e.what();
    }

    return res;  // inconclusive
}

std::string BranchDiagram::to_csv() const {
    std::string out =
        "param,branch_id,u,v,stability,cycle_umin,cycle_umax,cycle_vmin,cycle_vmax\n";
    char buf[256];
    for (const auto& q : points) {
        if (q.has_cycle) {
            std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g,%.17g,%s,%.17g,%.17g,%.17g,%.17g\n",
                          q.parameter, q.branch_id, q.point.u, q.point.v,
                          to_string(q.stability), q.cycle_u_min, q.cycle_u_max,
                          q.cycle_v_min, q.cycle_v_max);
        } else {
            std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g,%.17g,%s,,,,\n", q.parameter,
                          q.branch_id, q.point.u, q.point.v, to_string(q.stability));
        }
        out += buf;
    }
    return out;
}

BranchDiagram branch_diagram(const ModelParams& p, ScanParameter which,
                             std::pair<double, double> range, int n,
                             const BranchOptions& opts) {
    p.validate();
    if (n < 10) throw std::invalid_argument("branch_diagram: n >= 10 required");

    std::vector<double> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i)
        grid.push_back(range.first + (range.second - range.first) * i / (n - 1));

    // First pass records the interior stability signature so flips can be
    // refined; -1 encodes "no interior point".
    auto signature = [&](double val) -> int {
        const auto eq = interior_equilibria(with_parameter(p, which, val));
        if (eq.points.empty()) return -1;
        return eq.points.front().is_stable() ? 1 : 0;
    };

    if (opts.refine_near_flips) {
        std::vector<int> sig(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) sig[i] = signature(grid[i]);
        std::set<double> refined(grid.begin(), grid.end());
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            if (sig[i] == sig[i + 1]) continue;
            const std::size_t lo = i >= 2 ? i - 2 : 0;
            const std::size_t hi = std::min(grid.size() - 2, i + 2);
            for (std::size_t j = lo; j <= hi; ++j) {
                refined.insert(grid[j] + (grid[j + 1] - grid[j]) / 3.0);
                refined.insert(grid[j] + 2.0 * (grid[j + 1] - grid[j]) / 3.0);
            }
        }
        grid.assign(refined.begin(), refined.end());
    }

    BranchDiagram diag;
    diag.parameter = which;
    std::vector<std::vector<BranchPoint>> rows(grid.size());
    std::vector<std::string> warns(grid.size());
    parallel_for(static_cast<int>(grid.size()), opts.workers, [&](int gi) {
        const double val = grid[gi];
        try {
            const ModelParams q = with_parameter(p, which, val);
            const auto bnd = boundary_equilibria(q);
            for (std::size_t b = 0; b < bnd.size(); ++b)
                rows[gi].push_back({val, static_cast<int>(b), bnd[b].point,
                                    bnd[b].stability});
            const auto inter = interior_equilibria(q);
            for (std::size_t j = 0; j < inter.points.size(); ++j) {
                BranchPoint bp{val, static_cast<int>(3 + j), inter.points[j].point,
                               inter.points[j].stability};
                if (opts.attach_cycles &&
                    inter.points[j].stability == StabilityClass::UnstableFocus) {
                    const State2 seed{bp.point.u * 1.01, bp.point.v * 1.01};
                    CycleOptions copts;
                    copts.t_end = opts.cycle_t_end;
                    const auto det =
                        detect_limit_cycle(q, seed, TimeDirection::Forward, copts);
                    if (det.outcome == CycleOutcome::Cycle) {
                        bp.has_cycle = true;
                        bp.cycle_u_min = det.report.u_min;
                        bp.cycle_u_max = det.report.u_max;
                        bp.cycle_v_min = det.report.v_min;
                        bp.cycle_v_max = det.report.v_max;
                    }
                }
                rows[gi].push_back(bp);
            }
        } catch (const std::exception& e) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "param=%.12g: %s", val, e.what());
            warns[gi] = buf;
        }
    });
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        diag.points.insert(diag.points.end(), rows[gi].begin(), rows[gi].end());
        if (!warns[gi].empty()) diag.warnings.push_back(warns[gi]);
    }
    return diag;
}

}  // namespace coophunt
