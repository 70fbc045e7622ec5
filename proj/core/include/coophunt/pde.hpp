#ifndef COOPHUNT_PDE_HPP
#define COOPHUNT_PDE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <variant>

#include "coophunt/dispersion.hpp"
#include "coophunt/fft.hpp"
#include "coophunt/grid.hpp"

namespace coophunt {

struct FieldState {
    double time = 0.0;
    std::vector<double> u, v;
};

/// Heterogeneous perturbation around the coexistence state:
/// u_j = u* + eps*xi_j, v_j = v* + eps*psi_j with iid standard normals.
struct NoiseIc {
    double epsilon = 1e-5;
    std::uint64_t seed = 0;
};

/// Piecewise-constant connection of two homogeneous states: inner for
/// |x| < L1, outer elsewhere. A tanh ramp of width smooth_width (default
/// 2*dx) avoids Gibbs ringing in the spectral diffusion; the midpoint of
/// the ramp sits exactly at +-L1.
struct StepIc {
    State2 inner, outer;
    double L1 = 100.0;
    double smooth_width = -1.0;  // < 0 selects 2*dx
};

struct SimConfig {
    ModelParams model;
    SpatialParams spatial;
    Grid1D grid;
    double dt = 0.01;
    double t_end = 3000.0;
    int snapshot_stride = 1000;  // steps between stored snapshots
    std::variant<NoiseIc, StepIc> ic = NoiseIc{};
    // Values below this floor are zeroed after each step. Keeps spectral
    // round-off from seeding linearly unstable far fields in front-speed
    // runs. 0 disables.
    double quench_floor = 0.0;
    bool reaction_enabled = true;  // test hook for pure-diffusion checks

    void validate() const;
};

/// Top-hat kernel convolution (phi_delta * field), computed spectrally by
/// multiplying the Fourier coefficients with sin(k*delta)/(k*delta).
std::vector<double> convolve_kernel(std::span<const double> field, double delta,
                                    const Grid1D& grid);

/// One Strang step: exact spectral diffusion half-steps around an explicit
/// midpoint reaction step. The convolved predator field is recomputed at
/// each reaction stage when delta > 0.
class Simulator {
  public:
    explicit Simulator(const SimConfig& cfg);

    const Grid1D& grid() const { return grid_; }
    void advance(FieldState& s);
    long long clamp_count() const { return clamps_; }

    std::vector<double> convolve(std::span<const double> field) const;

  private:
    void reaction_rhs(const std::vector<double>& u, const std::vector<double>& v,
                      std::vector<double>& du, std::vector<double>& dv) const;

    ModelParams p_;
    SpatialParams sp_;
    Grid1D grid_;
    double dt_;
    double floor_;
    bool react_;
    std::vector<double> half_u_, half_v_;  // diffusion half-step symbols
    std::vector<double> kernel_;           // sinc symbol (delta > 0)
    mutable std::unique_ptr<SpectralWorkspace> fft_;
    mutable std::vector<double> conv_, um_, vm_, du_, dv_;
    long long clamps_ = 0;
};

FieldState make_noise_ic(const Grid1D& grid, const ModelParams& p, double epsilon,
                         std::uint64_t seed);

FieldState make_step_ic(const Grid1D& grid, const State2& inner, const State2& outer,
                        double L1, double smooth_width = -1.0);

/// One-shot step (plans transforms per call; prefer Simulator in loops).
FieldState step(const FieldState& state, const SimConfig& cfg);

struct SimulationResult {
    std::vector<FieldState> snapshots;  // every stride plus the final state
    long long clamp_count = 0;
};

/// Deterministic given the seed. on_snapshot fires as each snapshot is
/// produced so callers can write incrementally.
SimulationResult simulate(const SimConfig& cfg,
                          const std::function<void(const FieldState&)>& on_snapshot = {});

}  // namespace coophunt

#endif
