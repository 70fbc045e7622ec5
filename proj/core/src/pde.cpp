#include "coophunt/pde.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace coophunt {

void SimConfig::validate() const {
    model.validate();
    spatial.validate();
    grid.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("SimConfig: t_end must be positive");
    if (snapshot_stride < 1)
        throw std::invalid_argument("SimConfig: snapshot_stride >= 1 required");
    if (spatial.delta > grid.half_length)
        throw std::invalid_argument("SimConfig: kernel half-range delta exceeds domain half-length");
    if (quench_floor < 0.0)
        throw std::invalid_argument("SimConfig: quench_floor must be >= 0");
    if (const auto* st = std::get_if<StepIc>(&ic)) {
        if (!(st->L1 > 0.0) || st->L1 >= grid.half_length)
            throw std::invalid_argument("SimConfig: step IC requires 0 < L1 < L");
    }
}

std::vector<double> convolve_kernel(std::span<const double> field, double delta,
                                    const Grid1D& grid) {
    grid.validate();
    if (!(delta > 0.0)) throw std::invalid_argument("convolve_kernel: delta must be positive");
    if (delta > grid.half_length)
        throw std::invalid_argument("convolve_kernel: delta exceeds domain half-length");
    if (static_cast<int>(field.size()) != grid.n)
        throw std::invalid_argument("convolve_kernel: field size does not match grid");

    SpectralWorkspace fft(grid.n);
    std::vector<double> symbol(grid.num_modes());
    for (int m = 0; m < grid.num_modes(); ++m)
        symbol[m] = sinc(grid.wavenumber(m) * delta);
    std::vector<double> out(grid.n);
    fft.apply_symbol(field, symbol, out);
    return out;
}

Simulator::Simulator(const SimConfig& cfg)
    : p_(cfg.model),
      sp_(cfg.spatial),
      grid_(cfg.grid),
      dt_(cfg.dt),
      floor_(cfg.quench_floor),
      react_(cfg.reaction_enabled) {
    cfg.validate();
    const int nm = grid_.num_modes();
    half_u_.resize(nm);
    half_v_.resize(nm);
    for (int m = 0; m < nm; ++m) {
        const double k2 = grid_.wavenumber(m) * grid_.wavenumber(m);
        half_u_[m] = std::exp(-sp_.d1 * k2 * dt_ / 2.0);
        half_v_[m] = std::exp(-sp_.d2 * k2 * dt_ / 2.0);
    }
    if (sp_.delta > 0.0) {
        kernel_.resize(nm);
        for (int m = 0; m < nm; ++m)
            kernel_[m] = sinc(grid_.wavenumber(m) * sp_.delta);
    }
    fft_ = std::make_unique<SpectralWorkspace>(grid_.n);
    conv_.resize(grid_.n);
    um_.resize(grid_.n);
    vm_.resize(grid_.n);
    du_.resize(grid_.n);
    dv_.resize(grid_.n);
}

std::vector<double> Simulator::convolve(std::span<const double> field) const {
    if (sp_.delta <= 0.0) return {field.begin(), field.end()};
    std::vector<double> out(grid_.n);
    fft_->apply_symbol(field, kernel_, out);
    return out;
}

void Simulator::reaction_rhs(const std::vector<double>& u, const std::vector<double>& v,
                             std::vector<double>& du, std::vector<double>& dv) const {
    const double* veff = v.data();
    if (sp_.delta > 0.0) {
        fft_->apply_symbol(v, kernel_, conv_);
        veff = conv_.data();
    }
    const int n = grid_.n;
    for (int i = 0; i < n; ++i) {
        const double e = 1.0 + p_.alpha * veff[i];
        const double den = p_.m + e * u[i];
        du[i] = u[i] * (1.0 - u[i]) - p_.c * e * u[i] * v[i] / den;
        dv[i] = p_.s * v[i] * (1.0 - p_.gamma * v[i] / (p_.beta + u[i]));
    }
}

void Simulator::advance(FieldState& s) {
    const int n = grid_.n;
    if (static_cast<int>(s.u.size()) != n || static_cast<int>(s.v.size()) != n)
        throw std::invalid_argument("Simulator::advance: state size does not match grid");

    fft_->apply_symbol(s.u, half_u_, s.u);
    fft_->apply_symbol(s.v, half_v_, s.v);

    if (react_) {
        reaction_rhs(s.u, s.v, du_, dv_);
        for (int i = 0; i < n; ++i) {
            um_[i] = s.u[i] + 0.5 * dt_ * du_[i];
            vm_[i] = s.v[i] + 0.5 * dt_ * dv_[i];
        }
        reaction_rhs(um_, vm_, du_, dv_);
        for (int i = 0; i < n; ++i) {
            s.u[i] += dt_ * du_[i];
            s.v[i] += dt_ * dv_[i];
        }
    }

    fft_->apply_symbol(s.u, half_u_, s.u);
    fft_->apply_symbol(s.v, half_v_, s.v);

    double max_u = 0.0, max_v = 0.0;
    for (int i = 0; i < n; ++i) {
        if (s.u[i] < 0.0) {
            s.u[i] = 0.0;
            ++clamps_;
        } else if (s.u[i] < floor_) {
            s.u[i] = 0.0;
        }
        if (s.v[i] < 0.0) {
            s.v[i] = 0.0;
            ++clamps_;
        } else if (s.v[i] < floor_) {
            s.v[i] = 0.0;
        }
        max_u = std::max(max_u, std::fabs(s.u[i]));
        max_v = std::max(max_v, std::fabs(s.v[i]));
    }
    s.time += dt_;
    if (!std::isfinite(max_u) || !std::isfinite(max_v))
        throw std::runtime_error("Simulator: non-finite state at t=" + std::to_string(s.time) +
                                 " (max|u|=" + std::to_string(max_u) +
                                 ", max|v|=" + std::to_string(max_v) + ")");
}

FieldState make_noise_ic(const Grid1D& grid, const ModelParams& p, double epsilon,
                         std::uint64_t seed) {
    grid.validate();
    const auto eq = unique_interior_equilibrium(p);
    std::mt19937_64 rng(seed);
    // Box-Muller keeps the stream identical across standard libraries.
    auto normal = [&rng]() {
        const double a =
            (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
        const double b =
            (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
        return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * M_PI * b);
    };
    FieldState s;
    s.u.resize(grid.n);
    s.v.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) s.u[i] = eq.point.u + epsilon * normal();
    for (int i = 0; i < grid.n; ++i) s.v[i] = eq.point.v + epsilon * normal();
    return s;
}

FieldState make_step_ic(const Grid1D& grid, const State2& inner, const State2& outer,
                        double L1, double smooth_width) {
    grid.validate();
    if (!(L1 > 0.0) || L1 >= grid.half_length)
        throw std::invalid_argument("make_step_ic: 0 < L1 < L required");
    const double w = smooth_width < 0.0 ? 2.0 * grid.dx() : smooth_width;
    FieldState s;
    s.u.resize(grid.n);
    s.v.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double r = std::fabs(grid.x(i));
        const double f = w > 0.0 ? 0.5 * (1.0 + std::tanh((r - L1) / w)) : (r < L1 ? 0.0 : 1.0);
        s.u[i] = inner.u + (outer.u - inner.u) * f;
        s.v[i] = inner.v + (outer.v - inner.v) * f;
    }
    return s;
}

FieldState step(const FieldState& state, const SimConfig& cfg) {
    Simulator sim(cfg);
    FieldState s = state;
    sim.advance(s);
    return s;
}

SimulationResult simulate(const SimConfig& cfg,
                          const std::function<void(const FieldState&)>& on_snapshot) {
    cfg.validate();
    FieldState s = std::visit(
        [&](const auto& ic) -> FieldState {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, NoiseIc>) {
                return make_noise_ic(cfg.grid, cfg.model, ic.epsilon, ic.seed);
            } else {
                return make_step_ic(cfg.grid, ic.inner, ic.outer, ic.L1, ic.smooth_width);
            }
        },
        cfg.ic);

    Simulator sim(cfg);
    SimulationResult out;
    out.snapshots.push_back(s);
    if (on_snapshot) on_snapshot(s);
    const long long n_steps = std::llround(cfg.t_end / cfg.dt);
    for (long long i = 1; i <= n_steps; ++i) {
        sim.advance(s);
        if (i % cfg.snapshot_stride == 0 || i == n_steps) {
            out.snapshots.push_back(s);
            if (on_snapshot) on_snapshot(s);
        }
    }
    out.clamp_count = sim.clamp_count();
    return out;
}

}  // namespace coophunt
