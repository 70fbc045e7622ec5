#include "coophunt/model.hpp"

#include <algorithm>
#include <cmath>

namespace coophunt {

void ModelParams::validate() const {
    auto pos = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (!pos(c) || !pos(m) || !pos(s) || !pos(gamma) || !pos(beta))
        throw std::invalid_argument("ModelParams: c, m, s, gamma, beta must be positive");
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw std::invalid_argument("ModelParams: alpha must be non-negative");
}

const char* to_string(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::Trivial: return "E0";
        case EquilibriumKind::PredatorFree: return "E1";
        case EquilibriumKind::PreyFree: return "E2";
        case EquilibriumKind::Interior: return "interior";
    }
    return "?";
}

const char* to_string(StabilityClass s) {
    switch (s) {
        case StabilityClass::StableNode: return "stable_node";
        case StabilityClass::StableFocus: return "stable_focus";
        case StabilityClass::UnstableNode: return "unstable_node";
        case StabilityClass::UnstableFocus: return "unstable_focus";
        case StabilityClass::Saddle: return "saddle";
        case StabilityClass::NonHyperbolic: return "non_hyperbolic";
    }
    return "?";
}

std::pair<Complex, Complex> Mat2::eigenvalues() const {
    const double tr = trace();
    const double dt = det();
    const double disc = tr * tr - 4.0 * dt;
    if (disc >= 0.0) {
        // Stable quadratic: avoid cancellation in the smaller root.
        const double r = std::sqrt(disc);
        const double q = -0.5 * (tr >= 0.0 ? -(tr + r) : -(tr - r));
        double l1 = q;
        double l2 = (q != 0.0) ? dt / q : 0.5 * (tr - std::copysign(r, tr));
        if (l1 > l2) std::swap(l1, l2);
        return {Complex(l1, 0.0), Complex(l2, 0.0)};
    }
    const double re = 0.5 * tr;
    const double im = 0.5 * std::sqrt(-disc);
    return {Complex(re, im), Complex(re, -im)};
}

State2 reaction_rates(const State2& x, const ModelParams& p) {
    if (!std::isfinite(x.u) || !std::isfinite(x.v))
        throw std::invalid_argument("reaction_rates: non-finite state");
    const double e = 1.0 + p.alpha * x.v;  // encounter factor
    const double den = p.m + e * x.u;
    const double du = x.u * (1.0 - x.u) - p.c * e * x.u * x.v / den;
    const double dv = p.s * x.v * (1.0 - p.gamma * x.v / (p.beta + x.u));
    return {du, dv};
}

Mat2 jacobian(const State2& x, const ModelParams& p) {
    const double u = x.u, v = x.v;
    const double e = 1.0 + p.alpha * v;
    const double den = p.m + e * u;
    const double den2 = den * den;
    Mat2 J;
    J.a11 = 1.0 - 2.0 * u - p.c * p.m * e * v / den2;
    J.a12 = -p.c * p.m * u * p.alpha * v / den2 - p.c * u * e / den;
    const double bu = p.beta + u;
    J.a21 = p.s * p.gamma * v * v / (bu * bu);
    J.a22 = p.s * (1.0 - 2.0 * p.gamma * v / bu);
    return J;
}

CubicCoefficients cubic_coefficients(const ModelParams& p) {
    const double ga = p.gamma + p.alpha * p.beta;
    CubicCoefficients k;
    k.A1 = p.gamma * p.alpha;
    k.A2 = p.alpha * (p.c - p.gamma) + p.gamma * ga;
    k.A3 = (p.c - p.gamma) * ga + p.c * p.alpha * p.beta + p.m * p.gamma * p.gamma;
    k.A4 = p.c * p.beta * ga - p.m * p.gamma * p.gamma;
    return k;
}

std::vector<Complex> solve_cubic(double a, double b, double c, double d) {
    const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
    if (scale == 0.0) return {};
    if (std::fabs(a) < 1e-14 * scale) {
        // Quadratic (alpha = 0 collapses the leading coefficient exactly).
        if (std::fabs(b) < 1e-14 * scale) {
            if (std::fabs(c) < 1e-300) return {};
            return {Complex(-d / c, 0.0)};
        }
        const double disc = c * c - 4.0 * b * d;
        if (disc >= 0.0) {
            const double r = std::sqrt(disc);
            const double q = -0.5 * (c + std::copysign(r, c));
            if (q == 0.0) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
            return {Complex(q / b, 0.0), Complex(d / q, 0.0)};
        }
        const double re = -c / (2.0 * b), im = std::sqrt(-disc) / (2.0 * b);
        return {Complex(re, im), Complex(re, -im)};
    }

    // Depressed form t^3 + p t + q with u = t - b/(3a).
    const double B = b / a, C = c / a, D = d / a;
    const double off = B / 3.0;
    const double pp = C - B * B / 3.0;
    const double qq = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
    const double disc = -4.0 * pp * pp * pp - 27.0 * qq * qq;

    std::vector<Complex> roots;
    if (disc > 0.0) {
        // Three distinct real roots (trigonometric form).
        const double r = 2.0 * std::sqrt(-pp / 3.0);
        const double arg = std::clamp(3.0 * qq / (pp * r), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.emplace_back(r * std::cos(phi - 2.0 * M_PI * k / 3.0) - off, 0.0);
    } else {
        // One real root via Cardano, remaining pair from deflation.
        const double h = std::sqrt(std::max(0.0, qq * qq / 4.0 + pp * pp * pp / 27.0));
        const double t1 = std::cbrt(-qq / 2.0 + h) + std::cbrt(-qq / 2.0 - h);
        const double x1 = t1 - off;
        // Deflate a x^3 + ... = a (x - x1)(x^2 + e1 x + e0).
        const double e1 = B + x1;
        const double e0 = C + x1 * e1;
        const double qd = e1 * e1 - 4.0 * e0;
        roots.emplace_back(x1, 0.0);
        if (qd >= 0.0) {
            const double r = std::sqrt(qd);
            roots.emplace_back(0.5 * (-e1 + r), 0.0);
            roots.emplace_back(0.5 * (-e1 - r), 0.0);
        } else {
            const double re = -0.5 * e1, im = 0.5 * std::sqrt(-qd);
            roots.emplace_back(re, im);
            roots.emplace_back(re, -im);
        }
    }
    return roots;
}

StabilityClass classify_stability(const std::pair<Complex, Complex>& eig, double tol) {
    const double r1 = eig.first.real(), r2 = eig.second.real();
    if (std::fabs(r1) <= tol || std::fabs(r2) <= tol)
        return StabilityClass::NonHyperbolic;
    const bool complex_pair = std::fabs(eig.first.imag()) > 0.0;
    if (complex_pair)
        return r1 < 0.0 ? StabilityClass::StableFocus : StabilityClass::UnstableFocus;
    if (r1 * r2 < 0.0) return StabilityClass::Saddle;
    return r1 < 0.0 ? StabilityClass::StableNode : StabilityClass::UnstableNode;
}

EquilibriumReport make_report(EquilibriumKind kind, const State2& x, const ModelParams& p) {
    EquilibriumReport r;
    r.kind = kind;
    r.point = x;
    r.jacobian = jacobian(x, p);
    r.eigenvalues = r.jacobian.eigenvalues();
    r.stability = classify_stability(r.eigenvalues);
    return r;
}

std::vector<EquilibriumReport> boundary_equilibria(const ModelParams& p) {
    p.validate();
    return {
        make_report(EquilibriumKind::Trivial, {0.0, 0.0}, p),
        make_report(EquilibriumKind::PredatorFree, {1.0, 0.0}, p),
        make_report(EquilibriumKind::PreyFree, {0.0, p.beta / p.gamma}, p),
    };
}

InteriorEquilibria interior_equilibria(const ModelParams& p) {
    p.validate();
    const CubicCoefficients k = cubic_coefficients(p);
    const auto roots = solve_cubic(k.A1, k.A2, k.A3, k.A4);

    InteriorEquilibria out;
    const double dscale = 3.0 * std::fabs(k.A1) + 2.0 * std::fabs(k.A2) + std::fabs(k.A3);

    // Near a fold the double root splits by ~sqrt(eps) no matter how close
    // the parameters sit to the locus, so the degeneracy test works on root
    // separation (real gap or conjugate-pair height) rather than |R'| alone.
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!(roots[i].real() > 1e-12 && roots[i].real() < 1.0 - 1e-12)) continue;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (!(roots[j].real() > 1e-12 && roots[j].real() < 1.0 - 1e-12)) continue;
            if (std::abs(roots[i] - roots[j]) < 1e-6) out.degenerate = true;
        }
    }

    std::vector<double> us;
    for (const Complex& z : roots) {
        if (std::fabs(z.imag()) >= 1e-9) continue;
        double u = z.real();
        if (!(u > 1e-12 && u < 1.0 - 1e-12)) continue;
        // Newton polish on R; near-double roots move little but the
        // residual check below needs the extra digits.
        for (int it = 0; it < 3; ++it) {
            const double f = k.eval(u);
            const double fp = k.deriv(u);
            if (fp == 0.0) break;
            const double step = f / fp;
            u -= step;
            if (std::fabs(step) < 1e-16) break;
        }
        if (!(u > 1e-12 && u < 1.0 - 1e-12)) continue;
        if (std::fabs(k.deriv(u)) <= 1e-10 * std::max(dscale, 1e-300))
            out.degenerate = true;
        us.push_back(u);
    }
    std::sort(us.begin(), us.end());
    // Collapse duplicates arising from a nearly repeated root.
    us.erase(std::unique(us.begin(), us.end(),
                         [](double a, double b) { return std::fabs(a - b) < 1e-11; }),
             us.end());
    for (double u : us) {
        const State2 x{u, (p.beta + u) / p.gamma};
        out.points.push_back(make_report(EquilibriumKind::Interior, x, p));
    }
    return out;
}

EquilibriumReport unique_interior_equilibrium(const ModelParams& p) {
    const auto eq = interior_equilibria(p);
    if (eq.points.size() != 1)
        throw std::runtime_error("expected a unique interior equilibrium, found " +
                                 std::to_string(eq.points.size()));
    return eq.points.front();
}

}  // namespace coophunt
