#include "coophunt/wave.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "coophunt/fft.hpp"

namespace coophunt {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::HomogeneousStationary: return "homogeneous_stationary";
        case Regime::HomogeneousOscillatory: return "homogeneous_oscillatory";
        case Regime::StationaryPattern: return "stationary_pattern";
        case Regime::OscillatoryPattern: return "oscillatory_pattern";
    }
    return "?";
}

std::optional<double> front_position(const FieldState& state, const Grid1D& grid,
                                     FieldSelect field, double level, Side side) {
    const auto& f = field == FieldSelect::U ? state.u : state.v;
    if (static_cast<int>(f.size()) != grid.n)
        throw std::invalid_argument("front_position: state size does not match grid");
    const int mid = grid.n / 2;
    auto cross = [&](int i) -> std::optional<double> {
        const double a = f[i] - level, b = f[i + 1] - level;
        if (a == 0.0) return grid.x(i);
        if (a * b < 0.0) return grid.x(i) + grid.dx() * a / (a - b);
        return std::nullopt;
    };
    if (side == Side::Right) {
        for (int i = grid.n - 2; i >= mid; --i)
            if (auto p = cross(i)) return p;
    } else {
        for (int i = 0; i < mid; ++i)
            if (auto p = cross(i)) return p;
    }
    return std::nullopt;
}

std::string FrontTrack::to_csv() const {
    std::string out = "t,position,level\n";
    char buf[96];
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", times[i], positions[i], level);
        out += buf;
    }
    return out;
}

FrontTrack track_front(std::span<const FieldState> snapshots, const Grid1D& grid,
                       FieldSelect field, double level, Side side, double boundary_margin) {
    FrontTrack tr;
    tr.level = level;
    const double limit = grid.half_length - boundary_margin;
    for (const auto& s : snapshots) {
        const auto p = front_position(s, grid, field, level, side);
        if (!p) continue;
        if (std::fabs(*p) > limit) continue;
        tr.times.push_back(s.time);
        tr.positions.push_back(*p);
    }
    return tr;
}

SpeedEstimate estimate_speed(const FrontTrack& track, double t_lo, double t_hi) {
    std::vector<double> ts, xs;
    for (std::size_t i = 0; i < track.times.size(); ++i) {
        if (track.times[i] < t_lo || track.times[i] > t_hi) continue;
        ts.push_back(track.times[i]);
        xs.push_back(track.positions[i]);
    }
    if (ts.size() < 10)
        throw std::runtime_error("estimate_speed: fewer than 10 samples in the fit window");

    const double n = static_cast<double>(ts.size());
    double st = 0, sx = 0, stt = 0, stx = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        st += ts[i];
        sx += xs[i];
        stt += ts[i] * ts[i];
        stx += ts[i] * xs[i];
    }
    const double denom = n * stt - st * st;
    SpeedEstimate est;
    est.speed = (n * stx - st * sx) / denom;
    const double icpt = (sx - est.speed * st) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double r = xs[i] - (icpt + est.speed * ts[i]);
        ss += r * r;
    }
    est.rms_residual = std::sqrt(ss / n);
    est.samples = ts.size();
    // Samples near the window edges missing from the track mean the front
    // left the tracked region during the window.
    est.boundary_contaminated =
        !track.times.empty() && (track.times.back() < t_hi || track.times.front() > t_lo);
    return est;
}

RegimeReport classify_pattern(std::span<const FieldState> snapshots, double tail_fraction) {
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw std::invalid_argument("classify_pattern: tail_fraction in (0, 1] required");
    const std::size_t total = snapshots.size();
    const std::size_t tail_start =
        total - static_cast<std::size_t>(std::floor(tail_fraction * total));
    const std::size_t m = total - tail_start;
    if (m < 20)
        throw std::invalid_argument("classify_pattern: fewer than 20 tail snapshots");
    const std::size_t n = snapshots[0].u.size();

    // V_x: mean over time of the per-snapshot spatial variance.
    double vx = 0.0;
    for (std::size_t sidx = tail_start; sidx < total; ++sidx) {
        const auto& u = snapshots[sidx].u;
        double mean = 0.0;
        for (double x : u) mean += x;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double x : u) var += (x - mean) * (x - mean);
        vx += var / static_cast<double>(n);
    }
    vx /= static_cast<double>(m);

    // V_t: mean over space of the per-point temporal variance.
    double vt = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double mean = 0.0;
        for (std::size_t sidx = tail_start; sidx < total; ++sidx) mean += snapshots[sidx].u[j];
        mean /= static_cast<double>(m);
        double var = 0.0;
        for (std::size_t sidx = tail_start; sidx < total; ++sidx) {
            const double d = snapshots[sidx].u[j] - mean;
            var += d * d;
        }
        vt += var / static_cast<double>(m);
    }
    vt /= static_cast<double>(n);

    // theta_t sits two orders below the weakest oscillatory signal seen at
    // acceptance scale (V_t ~ 9e-2) and an order above the residual phase
    // drift of saturated stationary patterns (V_t <= 4e-4 at T = 3000).
    constexpr double theta_x = 1e-6, theta_t = 1e-3;
    Regime label;
    if (vx < theta_x)
        label = vt < theta_t ? Regime::HomogeneousStationary : Regime::HomogeneousOscillatory;
    else
        label = vt < theta_t ? Regime::StationaryPattern : Regime::OscillatoryPattern;
    return {label, vx, vt};
}

double dominant_wavenumber(const FieldState& state, const Grid1D& grid, FieldSelect field) {
    const auto& f = field == FieldSelect::U ? state.u : state.v;
    SpectralWorkspace fft(grid.n);
    std::vector<std::complex<double>> spec(grid.num_modes());
    fft.forward(f, spec);
    int best = 1;
    double best_mag = 0.0;
    for (int mIdx = 1; mIdx < grid.num_modes(); ++mIdx) {
        const double mag = std::abs(spec[mIdx]);
        if (mag > best_mag) {
            best_mag = mag;
            best = mIdx;
        }
    }
    return grid.wavenumber(best);
}

}  // namespace coophunt
