#ifndef COOPHUNT_MODEL_HPP
#define COOPHUNT_MODEL_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace coophunt {

using Complex = std::complex<double>;

/// Rescaled kinetic parameters of the predator-prey system with
/// cooperative hunting and a modified Leslie-Gower predator.
struct ModelParams {
    double c;      // consumption scale
    double m;      // half-saturation offset
    double s;      // predator growth rate
    double gamma;  // predator intraspecific competition
    double beta;   // alternative-food constant
    double alpha;  // cooperative hunting strength (0 = no cooperation)

    void validate() const;
};

/// Baseline parameter set used throughout the regression suite.
inline ModelParams baseline_params(double alpha = 0.04) {
    return ModelParams{0.05, 0.08, 0.05, 0.08, 0.01, alpha};
}

struct State2 {
    double u = 0.0;  // prey biomass
    double v = 0.0;  // predator biomass
};

struct Mat2 {
    double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
    /// Eigenvalues as roots of l^2 - tr*l + det = 0.
    std::pair<Complex, Complex> eigenvalues() const;
};

enum class EquilibriumKind { Trivial, PredatorFree, PreyFree, Interior };

enum class StabilityClass {
    StableNode,
    StableFocus,
    UnstableNode,
    UnstableFocus,
    Saddle,
    NonHyperbolic
};

const char* to_string(EquilibriumKind k);
const char* to_string(StabilityClass s);

struct EquilibriumReport {
    EquilibriumKind kind;
    State2 point;
    Mat2 jacobian;
    std::pair<Complex, Complex> eigenvalues;
    StabilityClass stability;

    bool is_stable() const {
        return stability == StabilityClass::StableNode ||
               stability == StabilityClass::StableFocus;
    }
};

/// Coefficients of the interior-equilibrium cubic
/// R(u) = A1 u^3 + A2 u^2 + A3 u + A4, whose roots in (0,1) are the
/// prey components of coexistence states (v = (beta+u)/gamma).
struct CubicCoefficients {
    double A1, A2, A3, A4;

    double eval(double u) const { return ((A1 * u + A2) * u + A3) * u + A4; }
    double deriv(double u) const { return (3.0 * A1 * u + 2.0 * A2) * u + A3; }
};

/// Right-hand side (du/dt, dv/dt) of the temporal system.
State2 reaction_rates(const State2& x, const ModelParams& p);

/// Closed-form Jacobian of the kinetics at an arbitrary state.
Mat2 jacobian(const State2& x, const ModelParams& p);

CubicCoefficients cubic_coefficients(const ModelParams& p);

/// All (possibly complex) roots of a real cubic; degree degenerates
/// gracefully when the leading coefficient vanishes (alpha = 0).
std::vector<Complex> solve_cubic(double a, double b, double c, double d);

/// Stability classification from an eigenvalue pair. Real parts within
/// +-tol of zero are reported NonHyperbolic.
StabilityClass classify_stability(const std::pair<Complex, Complex>& eig,
                                  double tol = 1e-10);

/// E0 = (0,0), E1 = (1,0), E2 = (0, beta/gamma), each with Jacobian,
/// eigenvalues and stability class.
std::vector<EquilibriumReport> boundary_equilibria(const ModelParams& p);

struct InteriorEquilibria {
    std::vector<EquilibriumReport> points;  // sorted ascending in u
    bool degenerate = false;  // double root of R within tolerance (saddle-node locus)
};

/// Coexistence equilibria: real roots of R(u) in (0,1) polished by Newton,
/// paired with v = (beta+u)/gamma.
InteriorEquilibria interior_equilibria(const ModelParams& p);

/// The unique interior equilibrium; throws when the count differs from one.
EquilibriumReport unique_interior_equilibrium(const ModelParams& p);

EquilibriumReport make_report(EquilibriumKind kind, const State2& x,
                              const ModelParams& p);

}  // namespace coophunt

#endif
