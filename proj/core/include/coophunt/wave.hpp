#ifndef COOPHUNT_WAVE_HPP
#define COOPHUNT_WAVE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coophunt/grid.hpp"
#include "coophunt/pde.hpp"

namespace coophunt {

enum class FieldSelect { U, V };
enum class Side { Left, Right };

/// Outermost level crossing on the chosen side of the domain midpoint,
/// linearly interpolated. Empty when the field never crosses the level
/// there (front at the boundary or not formed).
std::optional<double> front_position(const FieldState& state, const Grid1D& grid,
                                     FieldSelect field, double level, Side side);

struct FrontTrack {
    std::vector<double> times;
    std::vector<double> positions;
    double level = 0.0;

    std::string to_csv() const;
};

/// Per-snapshot tracking; snapshots without a valid crossing, and those
/// whose position enters the boundary margin, are dropped. The margin is
/// 5*delta for the nonlocal model and 5 grid cells otherwise.
FrontTrack track_front(std::span<const FieldState> snapshots, const Grid1D& grid,
                       FieldSelect field, double level, Side side,
                       double boundary_margin);

struct SpeedEstimate {
    double speed = 0.0;
    double rms_residual = 0.0;
    std::size_t samples = 0;
    bool boundary_contaminated = false;
};

/// Least-squares slope of position vs time inside [t_lo, t_hi]. Throws when
/// fewer than 10 samples fall inside the window.
SpeedEstimate estimate_speed(const FrontTrack& track, double t_lo, double t_hi);

enum class Regime {
    HomogeneousStationary,
    HomogeneousOscillatory,
    StationaryPattern,
    OscillatoryPattern
};

const char* to_string(Regime r);

struct RegimeReport {
    Regime label;
    double spatial_variance;   // V_x: time-mean of per-snapshot spatial variance of u
    double temporal_variance;  // V_t: space-mean of per-point temporal variance of u
};

/// Tail-window variance classification with thresholds theta = 1e-6 on the
/// rescaled variables. Requires at least 20 tail snapshots.
RegimeReport classify_pattern(std::span<const FieldState> snapshots,
                              double tail_fraction = 0.25);

/// Wavenumber of the strongest nonzero Fourier mode of the final snapshot.
double dominant_wavenumber(const FieldState& state, const Grid1D& grid, FieldSelect field);

}  // namespace coophunt

#endif
