#include "coophunt/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "coophunt/parallel.hpp"

namespace coophunt {

void SpatialParams::validate() const {
    if (!(d1 > 0.0) || !(d2 > 0.0))
        throw std::invalid_argument("SpatialParams: d1, d2 must be positive");
    if (!(delta >= 0.0)) throw std::invalid_argument("SpatialParams: delta must be >= 0");
}

double sinc(double x) {
    const double ax = std::fabs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

Complex sinc(const Complex& z) {
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

Linearization linearize_interior(const ModelParams& p) {
    const auto eq = unique_interior_equilibrium(p);
    const Mat2 J = eq.jacobian;
    const double u = eq.point.u, v = eq.point.v;
    const double den = p.m + (1.0 + p.alpha * v) * u;
    Linearization lin;
    lin.eq = eq.point;
    lin.a11 = J.a11;
    lin.a12 = J.a12;
    lin.a21 = J.a21;
    lin.a22 = J.a22;
    lin.M = p.c * p.m * p.alpha * u * v / (den * den);
    return lin;
}

namespace {

std::pair<Complex, Complex> quadratic_roots(double B, double C) {
    const double disc = B * B - 4.0 * C;
    if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        return {Complex(0.5 * (B + r), 0.0), Complex(0.5 * (B - r), 0.0)};
    }
    const double im = 0.5 * std::sqrt(-disc);
    return {Complex(0.5 * B, im), Complex(0.5 * B, -im)};
}

DispersionCurve build_curve(const Linearization& lin, const SpatialParams& sp,
                            std::span<const double> k_grid, bool nonlocal) {
    DispersionCurve c;
    c.nonlocal = nonlocal;
    c.max_re = -std::numeric_limits<double>::infinity();
    for (const double k : k_grid) {
        const double k2 = k * k;
        const double B = lin.trace() - (sp.d1 + sp.d2) * k2;
        const double a12k =
            nonlocal ? lin.a12 + lin.M * (1.0 - sinc(k * sp.delta)) : lin.a12;
        const double C = sp.d1 * sp.d2 * k2 * k2 -
                         (lin.a11 * sp.d2 + lin.a22 * sp.d1) * k2 +
                         (lin.a11 * lin.a22 - a12k * lin.a21);
        const auto [lp, lm] = quadratic_roots(B, C);
        c.k.push_back(k);
        c.lambda_plus.push_back(lp);
        c.lambda_minus.push_back(lm);
        c.trace_term.push_back(B);
        c.det_term.push_back(C);
        const double re = std::max(lp.real(), lm.real());
        if (re > c.max_re) {
            c.max_re = re;
            c.k_at_max = k;
        }
        if (k > 0.0 && re > 0.0) c.has_unstable = true;
    }
    return c;
}

// Local closed-form threshold; assumes det J > 0 and a11 > 0, which the
// public wrapper validates.
TuringResult local_core(const Linearization& lin, double d2) {
    const double X = lin.a11 * lin.a22 - 2.0 * lin.a12 * lin.a21;
    const double rad = d2 * d2 * X * X - d2 * d2 * lin.a11 * lin.a11 * lin.a22 * lin.a22;
    if (rad < 0.0)
        throw std::runtime_error("turing_threshold_local: negative discriminant");
    const double d1c = (d2 * X - std::sqrt(rad)) / (lin.a22 * lin.a22);
    const double k2min = (d2 * lin.a11 + d1c * lin.a22) / (2.0 * d1c * d2);
    if (!(d1c > 0.0) || !(k2min > 0.0))
        throw std::runtime_error("turing_threshold_local: no positive threshold");
    const double k = std::sqrt(k2min);
    const double Cmin = d1c * d2 * k2min * k2min -
                        (lin.a11 * d2 + lin.a22 * d1c) * k2min + lin.det();
    return {d1c, k, TuringMode::Local, std::fabs(Cmin)};
}

struct NonlocalTangency {
    const Linearization& lin;
    double d2, delta;
    double Ma21;  // a21 * M

    double h(double k) const { return lin.det() - Ma21 * (1.0 - sinc(k * delta)); }

    // Critical-wavenumber equation obtained by eliminating d1 from the
    // tangency system Delta = 0, dDelta/dk = 0.
    double F(double k) const {
        const double k2 = k * k;
        return 2.0 * lin.a11 * d2 * d2 * k2 * k2 -
               2.0 * (2.0 * d2 * k2 - lin.a22) * h(k) +
               (d2 * k2 - lin.a22) * Ma21 * (std::cos(k * delta) - sinc(k * delta));
    }

    double d1_of(double k) const {
        const double k2 = k * k;
        return (d2 * lin.a11 * k2 - h(k)) / (k2 * (d2 * k2 - lin.a22));
    }

    double Delta(double k, double d1) const {
        const double k2 = k * k;
        return d1 * d2 * k2 * k2 - (lin.a11 * d2 + lin.a22 * d1) * k2 + h(k);
    }

    double dDelta_dk(double k, double d1) const {
        const double dh =
            (Ma21 / k) * (std::cos(k * delta) - sinc(k * delta));
        return 4.0 * d1 * d2 * k * k * k - 2.0 * (lin.a11 * d2 + lin.a22 * d1) * k + dh;
    }
};

}  // namespace

std::string DispersionCurve::to_csv() const {
    std::string out = "k,re_lambda_max,im_lambda_at_max,trace_term,det_term,unstable\n";
    char buf[192];
    for (std::size_t i = 0; i < k.size(); ++i) {
        const bool plus = lambda_plus[i].real() >= lambda_minus[i].real();
        const Complex l = plus ? lambda_plus[i] : lambda_minus[i];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", k[i], l.real(),
                      l.imag(), trace_term[i], det_term[i], l.real() > 0.0 ? 1 : 0);
        out += buf;
    }
    return out;
}

DispersionCurve local_dispersion(const ModelParams& p, const SpatialParams& sp,
                                 std::span<const double> k_grid) {
    p.validate();
    sp.validate();
    if (sp.delta != 0.0)
        throw std::invalid_argument("local_dispersion: delta must be 0 for the local model");
    return build_curve(linearize_interior(p), sp, k_grid, false);
}

DispersionCurve nonlocal_dispersion(const ModelParams& p, const SpatialParams& sp,
                                    std::span<const double> k_grid) {
    p.validate();
    sp.validate();
    if (!(sp.delta > 0.0))
        throw std::invalid_argument("nonlocal_dispersion: delta must be positive");
    return build_curve(linearize_interior(p), sp, k_grid, true);
}

TuringResult turing_threshold_local(const ModelParams& p, double d2) {
    p.validate();
    const Linearization lin = linearize_interior(p);
    // The tangency construction needs det J > 0 and the activator condition
    // only; past the Hopf line (tr J > 0) the same formula still defines the
    // curve the Turing plots draw, so no stability gate here.
    if (!(lin.det() > 0.0))
        throw std::runtime_error("turing_threshold_local: det J(E*) <= 0");
    if (!(lin.a11 > 0.0))
        throw std::runtime_error("turing_threshold_local: a11 <= 0, Turing instability impossible");
    return local_core(lin, d2);
}

std::optional<std::pair<double, double>> unstable_band(const ModelParams& p,
                                                       const SpatialParams& sp) {
    p.validate();
    sp.validate();
    const Linearization lin = linearize_interior(p);
    const double b = lin.a11 * sp.d2 + lin.a22 * sp.d1;
    const double disc = b * b - 4.0 * sp.d1 * sp.d2 * lin.det();
    if (disc < 0.0 || b <= 0.0) return std::nullopt;
    const double r = std::sqrt(disc);
    const double den = 2.0 * sp.d1 * sp.d2;
    return std::make_pair((b - r) / den, (b + r) / den);
}

TuringResult turing_threshold_nonlocal(const ModelParams& p, double d2, double delta) {
    p.validate();
    if (!(delta > 0.0))
        throw std::invalid_argument("turing_threshold_nonlocal: delta must be positive");
    const Linearization lin = linearize_interior(p);
    if (!(lin.det() > 0.0))
        throw std::runtime_error("turing_threshold_nonlocal: det J(E*) <= 0");

    NonlocalTangency sys{lin, d2, delta, lin.a21 * lin.M};

    // Scan range anchored on the local touching wavenumber.
    const TuringResult loc = local_core(lin, d2);
    const double k_max = 4.0 * loc.k_critical;
    const int ngrid = 8000;

    struct Candidate {
        double d1, k, res;
    };
    std::vector<Candidate> cands;
    double prev_k = k_max * 1e-6;
    double prev_F = sys.F(prev_k);
    for (int i = 1; i <= ngrid; ++i) {
        const double k = k_max * (1e-6 + (1.0 - 1e-6) * i / ngrid);
        const double Fk = sys.F(k);
        if (prev_F == 0.0 || (prev_F < 0.0) != (Fk < 0.0)) {
            double a = prev_k, b = k, fa = prev_F;
            for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
                const double m = 0.5 * (a + b);
                const double fm = sys.F(m);
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            const double kc = 0.5 * (a + b);
            const double d1 = sys.d1_of(kc);
            if (d1 > 0.0) {
                const double res =
                    std::fabs(sys.Delta(kc, d1)) + std::fabs(sys.dDelta_dk(kc, d1));
                if (res < 1e-8)
                    cands.push_back({d1, kc, res});
            }
        }
        prev_k = k;
        prev_F = Fk;
    }
    if (cands.empty())
        throw std::runtime_error(
            "turing_threshold_nonlocal: no tangency found for k in (0, " +
            std::to_string(k_max) + "]");

    // First instability as d1 decreases: the largest admissible threshold.
    const auto best =
        std::max_element(cands.begin(), cands.end(),
                         [](const Candidate& x, const Candidate& y) { return x.d1 < y.d1; });
    return {best->d1, best->k, TuringMode::Nonlocal, best->res};
}

std::vector<TuringCurvePoint> turing_curve(const ModelParams& p, double d2, double delta,
                                           std::pair<double, double> alpha_range, int n,
                                           int workers) {
    p.validate();
    if (n < 2) throw std::invalid_argument("turing_curve: n >= 2 required");

    std::vector<TuringCurvePoint> out(n);
    auto work = [&](int i) {
        TuringCurvePoint& pt = out[i];
        pt.alpha = alpha_range.first + (alpha_range.second - alpha_range.first) * i / (n - 1);
        try {
            ModelParams q = p;
            q.alpha = pt.alpha;
            const Linearization lin = linearize_interior(q);
            pt.oscillatory = lin.trace() > 0.0;
            if (delta == 0.0) {
                const TuringResult r = local_core(lin, d2);
                pt.d1_critical = r.d1_critical;
                pt.k_critical = r.k_critical;
            } else {
                const TuringResult r = turing_threshold_nonlocal(q, d2, delta);
                pt.d1_critical = r.d1_critical;
                pt.k_critical = r.k_critical;
            }
            pt.ok = true;
        } catch (const std::exception& e) {
            pt.error = e.what();
        }
    };

    parallel_for(n, workers, work);
    return out;
}

WaveSpeedPrediction wavespeed_boundary(const ModelParams& p, const SpatialParams& sp,
                                       WaveTarget target) {
    p.validate();
    sp.validate();
    if (target == WaveTarget::PredatorFreeFront) {
        return {target, 2.0 * std::sqrt(p.s * sp.d2), std::sqrt(p.s / sp.d2), 0.0};
    }
    if (target == WaveTarget::PreyFreeFront) {
        const double b11 =
            1.0 - p.c * p.beta * (p.gamma + p.alpha * p.beta) / (p.m * p.gamma * p.gamma);
        if (b11 <= 0.0)
            throw std::runtime_error(
                "wavespeed_boundary: prey-free front undefined (E2 is stable, b11 <= 0)");
        return {target, 2.0 * std::sqrt(b11 * sp.d1), std::sqrt(b11 / sp.d1), 0.0};
    }
    throw std::invalid_argument("wavespeed_boundary: use wavespeed_coexistence for the envelope");
}

namespace {

// Re(lambda)/K on the complexified dispersion relation at Q = q + iK.
// branch +1/-1 selects the sign in front of the square root.
double cbar(const Linearization& lin, const SpatialParams& sp, double K, double q,
            int branch) {
    const Complex Q(q, K);
    const Complex Q2 = Q * Q;
    Complex a12t(lin.a12, 0.0);
    if (sp.delta > 0.0)
        a12t += lin.M * (1.0 - sinc(Q * sp.delta));
    const Complex G = Complex(lin.trace(), 0.0) - (sp.d1 + sp.d2) * Q2;
    const Complex D = sp.d1 * sp.d2 * Q2 * Q2 - (sp.d2 * lin.a11 + sp.d1 * lin.a22) * Q2 +
                      (lin.a11 * lin.a22 - a12t * lin.a21);
    const Complex rad = std::sqrt(G * G - 4.0 * D);
    const Complex lam = 0.5 * (G + static_cast<double>(branch) * rad);
    return lam.real() / K;
}

}  // namespace

WaveSpeedPrediction wavespeed_coexistence(const ModelParams& p, const SpatialParams& sp,
                                          const CoexistenceSpeedOptions& opts) {
    p.validate();
    sp.validate();
    const Linearization lin = linearize_interior(p);
    const double tr = lin.trace();

    if (tr > 0.0) {
        // Real-exponent branch: c(K) = (tr + (d1+d2) K^2) / (2K).
        const double K = std::sqrt(tr / (sp.d1 + sp.d2));
        return {WaveTarget::CoexistenceEnvelope, std::sqrt(tr * (sp.d1 + sp.d2)), K, 0.0};
    }

    // Saddle of c(K, q) on either eigenvalue branch: minimum in K,
    // maximum in q (q = 0 included; c is even in q).
    const int N = opts.grid;
    const double dK = opts.K_max / N;
    const double dq = opts.q_max / N;
    struct Saddle {
        double c, K, q;
    };
    std::optional<Saddle> best;

    for (int branch : {+1, -1}) {
        auto f = [&](double K, double q) { return cbar(lin, sp, K, q, branch); };
        for (int i = 1; i < N; ++i) {
            const double K = i * dK;
            for (int j = 0; j < N; ++j) {
                const double q = j * dq;
                const double v0 = f(K, q);
                if (!(v0 > 0.0) || !std::isfinite(v0)) continue;
                const bool minK = f(K - dK, q) > v0 && f(K + dK, q) > v0;
                const bool maxq = (j == 0) ? f(K, dq) < v0
                                           : (f(K, q - dq) < v0 && f(K, q + dq) < v0);
                if (!minK || !maxq) continue;

                // Coordinate descent refinement.
                double Kc = K, qc = q, hK = dK, hq = dq;
                for (int round = 0; round < opts.descent_rounds; ++round) {
                    while (Kc - hK > 0.0 && f(Kc - hK, qc) < f(Kc, qc)) Kc -= hK;
                    while (f(Kc + hK, qc) < f(Kc, qc)) Kc += hK;
                    while (f(Kc, qc + hq) > f(Kc, qc)) qc += hq;
                    while (qc - hq >= 0.0 && f(Kc, qc - hq) > f(Kc, qc)) qc -= hq;
                    hK *= 0.5;
                    hq *= 0.5;
                }
                const double c0 = f(Kc, qc);
                // Curvature certificates.
                const double eK = 1e-4, eq = 1e-4;
                const double cKK = f(Kc + eK, qc) - 2.0 * c0 + f(Kc - eK, qc);
                const double cqq = (qc > eq)
                                       ? f(Kc, qc + eq) - 2.0 * c0 + f(Kc, qc - eq)
                                       : 2.0 * (f(Kc, qc + eq) - c0);
                if (!(cKK > 0.0) || !(cqq < 0.0) || !(c0 > 0.0)) continue;
                if (!best || c0 < best->c) best = Saddle{c0, Kc, qc};
            }
        }
    }
    if (!best)
        throw std::runtime_error(
            "wavespeed_coexistence: no admissible saddle point in K in (0," +
            std::to_string(opts.K_max) + "], q in [0," + std::to_string(opts.q_max) + "]");
    return {WaveTarget::CoexistenceEnvelope, best->c, best->K, best->q};
}

}  // namespace coophunt
