#ifndef COOPHUNT_DISPERSION_HPP
#define COOPHUNT_DISPERSION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coophunt/model.hpp"

namespace coophunt {

struct SpatialParams {
    double d1;           // prey diffusion
    double d2;           // predator diffusion
    double delta = 0.0;  // nonlocal interaction half-range (0 = local model)

    void validate() const;
};

/// sin(x)/x with a series branch below |x| = 1e-4 (no division at 0).
double sinc(double x);
Complex sinc(const Complex& z);

/// Linearization data at the coexistence state. The nonlocal coupling
/// enters only the prey row: A12(k) = a12 + M*(1 - sinc(k*delta)).
struct Linearization {
    State2 eq;
    double a11, a12, a21, a22;
    double M;  // c*m*alpha*u*v / (m + (1+alpha*v)*u)^2

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
};

Linearization linearize_interior(const ModelParams& p);

struct DispersionCurve {
    std::vector<double> k;
    std::vector<Complex> lambda_plus, lambda_minus;
    std::vector<double> trace_term;  // B(k^2) local / Gamma nonlocal
    std::vector<double> det_term;    // C(k^2) local / Delta nonlocal
    bool nonlocal = false;
    double max_re = 0.0;
    double k_at_max = 0.0;
    bool has_unstable = false;

    std::string to_csv() const;
};

DispersionCurve local_dispersion(const ModelParams& p, const SpatialParams& sp,
                                 std::span<const double> k_grid);

DispersionCurve nonlocal_dispersion(const ModelParams& p, const SpatialParams& sp,
                                    std::span<const double> k_grid);

enum class TuringMode { Local, Nonlocal };

struct TuringResult {
    double d1_critical;
    double k_critical;
    TuringMode mode;
    double tangency_residual;  // |Delta| + |dDelta/dk| at the threshold
};

/// Closed-form critical prey diffusion for the local model plus the
/// touching wavenumber. Requires a temporally stable coexistence state with
/// a11 > 0 (activator condition).
TuringResult turing_threshold_local(const ModelParams& p, double d2);

/// Both roots of C(k^2) = 0 in k^2 (zeta- < zeta+), or empty when the
/// discriminant is negative (no unstable band).
std::optional<std::pair<double, double>> unstable_band(const ModelParams& p,
                                                       const SpatialParams& sp);

/// Solves the tangency system for the nonlocal model: a dense bracket scan
/// of the transcendental critical-wavenumber equation followed by bisection;
/// among the tangency candidates the largest admissible d1 is returned
/// (first instability as d1 decreases).
TuringResult turing_threshold_nonlocal(const ModelParams& p, double d2, double delta);

struct TuringCurvePoint {
    double alpha;
    double d1_critical = 0.0;
    double k_critical = 0.0;
    bool oscillatory = false;  // temporal state is a focus past the Hopf line
    bool ok = false;
    std::string error;
};

std::vector<TuringCurvePoint> turing_curve(const ModelParams& p, double d2, double delta,
                                           std::pair<double, double> alpha_range, int n,
                                           int workers = 1);

enum class WaveTarget { PredatorFreeFront, PreyFreeFront, CoexistenceEnvelope };

struct WaveSpeedPrediction {
    WaveTarget target;
    double speed_min;
    double K_at_min;
    double q_at_min = 0.0;  // 0 for the real-exponent cases
};

/// Minimum linear spreading speeds of fronts leaving the boundary states:
/// 2*sqrt(s*d2) for the predator-free front, 2*sqrt(b11*d1) for the
/// prey-free front (requires b11 > 0).
WaveSpeedPrediction wavespeed_boundary(const ModelParams& p, const SpatialParams& sp,
                                       WaveTarget target);

struct CoexistenceSpeedOptions {
    double K_max = 5.0;
    double q_max = 5.0;
    int grid = 200;
    int descent_rounds = 60;
};

/// Envelope speed around the coexistence state. With tr J(E*) > 0 the
/// real-exponent branch has a stationary point at K^2 = tr/(d1+d2);
/// otherwise the complexified relation lambda(q + iK) is searched for a
/// saddle of c(K,q) = Re(lambda)/K (minimum in K, maximum in q).
WaveSpeedPrediction wavespeed_coexistence(const ModelParams& p, const SpatialParams& sp,
                                          const CoexistenceSpeedOptions& opts = {});

}  // namespace coophunt

#endif
